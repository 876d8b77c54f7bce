#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hhweyl/rational.hpp"

namespace hhweyl {

// Integer partition: weakly decreasing positive parts.
struct Partition {
  std::vector<unsigned> parts;

  Partition() = default;
  explicit Partition(std::vector<unsigned> p);  // sorts, drops zeros

  unsigned weight() const;
  std::size_t length() const { return parts.size(); }

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition&) const = default;

  std::string str() const;  // "(3,1,1)", "()" for empty
};

// Accepts "3,1,1", "(3,1,1)", "()" and "" (empty partition).
Partition parse_partition(std::string_view text);

std::vector<Partition> partitions_of(unsigned w);

// Permutation of {0..n-1}; composition (s * t)(x) = s(t(x)).
struct Permutation {
  std::vector<std::uint32_t> images;

  static Permutation identity(unsigned n);
  unsigned size() const { return static_cast<unsigned>(images.size()); }
  Permutation compose(const Permutation& t) const;  // apply t first, then this
  Permutation inverse() const;
  bool operator==(const Permutation&) const = default;
};

Partition cycle_type(const Permutation& p);

// Cycle lengths each reduced by one, zeros dropped: the n-independent name
// of a symmetric-group conjugacy class across the whole tower.
Partition stable_type(const Permutation& p);

// The cycle type in S_n of the class with the given stable type;
// requires weight + length <= n.
Partition cycle_type_from_stable(const Partition& stable, unsigned n);
bool stable_type_fits(const Partition& stable, unsigned n);

BigInt symmetric_class_size(const Partition& cycle_type, unsigned n);

// A canonical member: consecutive cycles (0 1 ...)(...) in decreasing length.
Permutation canonical_of_cycle_type(const Partition& cycle_type, unsigned n);

void for_each_class_member(const Partition& cycle_type, unsigned n,
                           const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> class_members(const Partition& stable, unsigned n);

inline constexpr unsigned kDefaultFhBound = 10;

struct FHConstants {
  Partition lam, mu;
  unsigned n = 0;
  std::map<Partition, std::uint64_t> terms;  // stable type -> coefficient, zeros omitted
};

// Product of the class sums named by two stable types inside S_n, brute
// force, counting over the smaller of the two classes.
FHConstants fh_constants(const Partition& lam, const Partition& mu, unsigned n,
                         unsigned bound = kDefaultFhBound);

// Coefficients on stable types of full weight |lam| + |mu|. These do not
// depend on n; computed at n = 2(|lam| + |mu|) and re-checked at n+1, n+2
// (StabilityFailure if the three runs differ).
std::map<Partition, std::uint64_t> top_constants(const Partition& lam, const Partition& mu);

// Memoized wrapper around top_constants: the product in the graded stable ring.
const std::map<Partition, std::uint64_t>& graded_fh_product(const Partition& lam,
                                                            const Partition& mu);

// f(t) = sum_k coeffs[k] * binomial(t, k); integrality of the values is
// automatic with integer coeffs.
struct IntegerValuedPolynomial {
  std::vector<BigInt> coeffs;
  BigInt evaluate(const BigInt& t) const;
  std::string str() const;
};

BigInt binomial(const BigInt& t, unsigned k);

// Fit one structure constant as a polynomial in n over [n_lo, n_hi] using
// forward differences; the last two sample points are held out and checked,
// NonPolynomialFit if they miss.
IntegerValuedPolynomial interpolate_constant(const Partition& lam, const Partition& mu,
                                             const Partition& nu, unsigned n_lo, unsigned n_hi);

}  // namespace hhweyl
