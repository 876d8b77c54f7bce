#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hhweyl/fhring.hpp"
#include "hhweyl/rational.hpp"

namespace hhweyl {

inline constexpr unsigned kDefaultWeightCap = 8;

// Element of the graded ring of symmetric functions, held in one of two
// bases: products of complete homogeneous functions h_lam, or monomial
// functions m_mu. Everything of weight above the cap is discarded; within
// the cap all arithmetic is exact.
struct SymFunc {
  enum class Basis { H, M };

  unsigned cap = kDefaultWeightCap;
  Basis basis = Basis::H;
  std::map<Partition, Rational> terms;  // no zero coefficients, weights <= cap

  static SymFunc zero(unsigned cap = kDefaultWeightCap, Basis basis = Basis::H);
  static SymFunc one(unsigned cap = kDefaultWeightCap);
  static SymFunc h(const Partition& lam, unsigned cap = kDefaultWeightCap);
  static SymFunc m(const Partition& mu, unsigned cap = kDefaultWeightCap);

  bool is_zero() const { return terms.empty(); }
  // largest weight with a nonzero coefficient, 0 for the zero element
  unsigned top_weight() const;
  Rational coefficient(const Partition& p) const;

  std::string str() const;  // "2*h[1,1] - h[2]", "0", "5/2"
};

SymFunc to_h(const SymFunc& f);
SymFunc to_m(const SymFunc& f);

// Expansion of a single h_lam in monomial functions; coefficients are
// nonnegative integers.
SymFunc h_to_m(const Partition& lam, unsigned cap = kDefaultWeightCap);

SymFunc add(const SymFunc& f, const SymFunc& g);          // caps must agree
SymFunc scale(const SymFunc& f, const Rational& c);
SymFunc multiply(const SymFunc& f, const SymFunc& g);     // h-basis result,
                                                          // truncated at cap
// True exactly when both sides agree coefficient-wise in the h-basis.
bool same_function(const SymFunc& f, const SymFunc& g);

// <h_lam | m_mu> = delta. Left argument is read in the h-basis, right in
// the m-basis, converting as needed.
Rational hall_pairing(const SymFunc& f, const SymFunc& g);

// Coefficients of the compositional inverse: with u = sum_i h_i t^{i+1},
// the inverse series is t = sum_i hstar(i) u^{i+1}. Homogeneous of weight i.
SymFunc hstar(unsigned i, unsigned cap = kDefaultWeightCap);

// Product hstar(mu_1) * hstar(mu_2) * ... for a partition mu.
SymFunc hstar_product(const Partition& mu, unsigned cap = kDefaultWeightCap);

// The ring morphism determined by h_i -> hstar(i); an involution.
SymFunc psi(const SymFunc& f);

// The basis dual to { hstar_product(mu) } under the pairing:
// <g_basis(lam), hstar_product(mu)> = delta_{lam,mu}.
SymFunc g_basis(const Partition& lam, unsigned cap = kDefaultWeightCap);

// Coefficients of f in the g basis (weight block by weight block).
std::map<Partition, Rational> expand_in_g(const SymFunc& f);

inline constexpr unsigned kDefaultMacdonaldBound = 6;

// Both sides of the ring-isomorphism comparison: the product
// g_basis(lam) * g_basis(mu) expanded back in the g basis, against the
// stable symmetric-group structure constants for the same pair.
struct MacdonaldReport {
  Partition lam, mu;
  std::map<Partition, Rational> g_side;
  std::map<Partition, std::uint64_t> class_side;
  bool integral = false;     // every g-side coefficient is an integer
  bool reconstructs = false; // g-side expansion rebuilds the product exactly
  bool matches = false;      // g-side equals class side term by term
  bool ok() const { return integral && reconstructs && matches; }
};

MacdonaldReport macdonald_check(const Partition& lam, const Partition& mu,
                                unsigned bound = kDefaultMacdonaldBound);

}  // namespace hhweyl
