#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hhweyl/matrix.hpp"

namespace hhweyl {

inline constexpr std::size_t kDefaultClosureCap = 200000;

// A finite matrix group, assembled by breadth-first closure of its
// generators. elements[0] is the identity; element i arose as
// elements[parent[i]] * generators[via_gen[i]], and gen_step records one
// multiplication step per generator, so arbitrary products resolve through
// generator words without a full multiplication table.
struct FiniteMatrixGroup {
  std::size_t dim = 0;      // ambient matrix size, always even
  unsigned ambient = 1;     // lcm of all generator entry conductors
  std::vector<ExactMatrix> generators;
  std::vector<std::uint32_t> generator_index;
  std::vector<ExactMatrix> elements;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via_gen;
  std::vector<std::vector<std::uint32_t>> gen_step;
  std::vector<std::uint32_t> inverse_of;

  std::size_t order() const { return elements.size(); }

  // Index of elements[i] * elements[j].
  std::uint32_t product_index(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inverse_index(std::uint32_t i) const { return inverse_of[i]; }
  std::uint32_t element_order(std::uint32_t i) const;
};

FiniteMatrixGroup close_group(const std::vector<ExactMatrix>& generators,
                              std::size_t cap = kDefaultClosureCap);

struct SymplecticReport {
  bool ok = true;
  std::size_t offending_generator = 0;
};

// Checks g^T J g = J for every generator, with J the standard block form
// [[0, I], [-I, 0]].
SymplecticReport verify_symplectic(const FiniteMatrixGroup& g);

// Matrix size minus the dimension of the fixed space ker(g - 1); this is the
// filtration degree of the class of g. Even whenever g is symplectic;
// require_even makes an odd value an error instead of a result.
unsigned filtration_degree(const ExactMatrix& el, bool require_even = true);

struct ConjClass {
  std::uint32_t representative = 0;  // smallest element index in the class
  std::vector<std::uint32_t> members;
  std::uint32_t order = 1;  // common element order
  unsigned d = 0;           // common filtration degree
  std::uint64_t size() const { return members.size(); }
};

struct ClassData {
  std::vector<ConjClass> classes;
  std::vector<std::uint32_t> class_of;
  // power_maps[c][k] = class of r^k for r in class c, k = 0..order-1
  std::vector<std::vector<std::uint32_t>> power_maps;
};

ClassData conjugacy_classes(const FiniteMatrixGroup& g, bool require_even_d = true);

// True when every element of the group is a 0/1 permutation matrix.
bool all_permutation_matrices(const FiniteMatrixGroup& g);

// One-line cycle notation for a permutation matrix acting on basis vectors,
// 1-indexed, fixed points omitted; identity prints as "()".
std::string cycle_label(const ExactMatrix& m);

// Display name for a class: cycle notation when the whole group consists of
// permutation matrices, otherwise "C<index>(d=...,size=...)".
std::string class_display_label(const FiniteMatrixGroup& g, const ClassData& cd,
                                std::uint32_t c, bool permutation_group);

}  // namespace hhweyl
