#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hhweyl/rational.hpp"

namespace hhweyl {

unsigned euler_phi(unsigned m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree.
// Length euler_phi(m) + 1, monic, integer coefficients. Memoized.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned m);

// An element of the cyclotomic field Q(zeta_m), stored as coordinates over
// the power basis {zeta_m^j : 0 <= j < phi(m)}, always reduced modulo the
// m-th cyclotomic polynomial. Rational values collapse to conductor 1, so
// conductor() == 1 exactly when the value is rational. The stored conductor
// of an irrational value may be any m with value in Q(zeta_m); minimal()
// computes the smallest one. Equality is value equality: both sides are
// embedded into the lcm of their conductors and compared coordinatewise.
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}
  explicit Cyclotomic(Rational v);

  // E(m)^k, canonicalized: the conductor drops to m/gcd(m,k) immediately.
  static Cyclotomic root_of_unity(unsigned m, long k = 1);

  // Value sum_j poly[j] * zeta_m^j for a polynomial of any degree.
  static Cyclotomic from_poly(unsigned m, std::vector<Rational> poly);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  bool is_rational() const { return conductor_ == 1; }
  bool is_integer() const { return conductor_ == 1 && coeffs_[0].get_den() == 1; }
  const Rational& rational_value() const;

  // Re-expression in Q(zeta_m) for a multiple m of the conductor.
  // Rational values still report conductor 1. Throws ConductorMismatch.
  Cyclotomic embedded(unsigned m) const;

  // Same value at its minimal conductor (Galois fixed-field descent).
  Cyclotomic minimal() const;

  Cyclotomic conjugate() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long k) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Canonical literal at minimal conductor, re-parseable by parse_cyclotomic.
  std::string str() const;

  // Coordinate fingerprint at a fixed ambient conductor (a multiple of the
  // stored one); equal values yield equal keys at the same ambient.
  void append_key(std::string& out, unsigned ambient) const;

private:
  Cyclotomic(unsigned conductor, std::vector<Rational> reduced_coeffs)
      : conductor_(conductor), coeffs_(std::move(reduced_coeffs)) {}

  std::vector<Rational> coords_at(unsigned m) const;  // raw embed, length phi(m)

  unsigned conductor_;
  std::vector<Rational> coeffs_;  // length euler_phi(conductor_)
};

// Literals: integers, fractions a/b, roots of unity E(m), powers E(m)^k
// (negative k inverts), products, sums, differences, parentheses.
Cyclotomic parse_cyclotomic(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace hhweyl
