#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hhweyl/group.hpp"

namespace hhweyl {

// Structure constants of the center of the group algebra in the class-sum
// basis: constants[c][cp] lists (cpp, N) with N the coefficient of the
// cpp class sum in (class sum c) * (class sum cp), i.e.
// N = #{x in class c : x^{-1} z in class cp} for any fixed z in class cpp.
struct CenterTable {
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>>> constants;

  std::size_t num_classes() const { return constants.size(); }
  std::uint64_t coefficient(std::uint32_t c, std::uint32_t cp, std::uint32_t cpp) const;
};

CenterTable center_structure_constants(const FiniteMatrixGroup& g, const ClassData& cd);

struct FiltrationReport {
  bool passed = true;
  bool exhaustive = true;
  std::uint64_t checked_pairs = 0;
  std::uint32_t witness_i = 0;  // meaningful when !passed
  std::uint32_t witness_j = 0;
};

inline constexpr std::size_t kFullFiltrationThreshold = 1000;

// Checks d(gh) <= d(g) + d(h): every ordered pair when the order is at most
// full_threshold, otherwise class representatives against everything plus a
// seeded random sample.
FiltrationReport filtration_check(const FiniteMatrixGroup& g, const ClassData& cd,
                                  std::size_t full_threshold = kFullFiltrationThreshold,
                                  std::uint64_t seed = 1);

// Same check, but a failure throws FiltrationViolation with the witness pair.
void require_filtration(const FiniteMatrixGroup& g, const ClassData& cd,
                        std::size_t full_threshold = kFullFiltrationThreshold);

struct GradedBasisElement {
  std::uint32_t class_index = 0;
  unsigned degree = 0;
  std::uint64_t size = 0;
  std::string label;
};

// The associated graded ring of the filtered center: class sums graded by
// filtration degree, products truncated to the degree-additive part.
struct GradedCenterRing {
  unsigned matrix_size = 0;            // 2n
  std::vector<std::size_t> betti;      // length 2n + 1, betti[k] = #classes of degree k
  std::vector<GradedBasisElement> basis;  // sorted by (degree, class index)
  // table[i][j] = sorted (k, coeff) with degree_k = degree_i + degree_j
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>>> table;

  std::size_t position_of_class(std::uint32_t class_index) const;
};

// Runs require_filtration before assembling the ring.
GradedCenterRing graded_center_ring(const FiniteMatrixGroup& g, const ClassData& cd,
                                    const CenterTable& ct);

struct CrosscheckReport {
  bool dimension_sum_matches = true;   // sum of betti equals the class count
  bool independent_count_matches = true;  // betti re-derived from fixed spaces
  bool odd_degrees_empty = true;
  bool dim2_rule_checked = false;      // only meaningful for 2x2 groups
  bool dim2_rule_holds = false;        // betti[2] == #classes - 1
};

CrosscheckReport betti_crosschecks(const GradedCenterRing& ring, const FiniteMatrixGroup& g,
                                   const ClassData& cd);

// Throws CrosscheckFailure when a check fails; expect_even relaxes the
// odd-degree check for groups admitted without the symplectic guarantee.
void require_crosschecks(const GradedCenterRing& ring, const FiniteMatrixGroup& g,
                         const ClassData& cd, bool expect_even = true);

// Short display name for basis position i: "1" for the identity class, then
// x, y, z, u, v, w, b7, b8, ...
std::string basis_symbol(std::size_t position);

// Plain-text multiplication table of the graded ring.
std::string render_mult_table(const GradedCenterRing& ring);

}  // namespace hhweyl
