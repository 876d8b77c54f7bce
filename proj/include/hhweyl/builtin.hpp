#pragma once

#include <cstdint>
#include <vector>

#include "hhweyl/matrix.hpp"

namespace hhweyl {

// Generator sets for the groups used across tests, the self test and the
// bundled example inputs.

// blockdiag(g, (g^{-1})^T): the action of g on V extended to V + V*.
// Always preserves the standard symplectic form.
ExactMatrix double_representation(const ExactMatrix& g);
std::vector<ExactMatrix> double_representation(const std::vector<ExactMatrix>& gens);

// P e_j = e_{images[j]}, images 0-indexed.
ExactMatrix permutation_matrix(const std::vector<std::uint32_t>& images);

// Cyclic group of order m inside SL2: diag(E(m), E(m)^(m-1)).
std::vector<ExactMatrix> cyclic_sl2_generators(unsigned m);

// Quaternion group of order 8 inside SL2: diag(i, -i) and [[0, 1], [-1, 0]].
std::vector<ExactMatrix> quaternion_generators();

// Symmetric group on three letters in its 2x2 reflection representation:
// a transposition and a 3-cycle with integer entries.
std::vector<ExactMatrix> s3_reflection_generators();

// Symmetric group on n letters as n x n permutation matrices
// (a transposition and an n-cycle).
std::vector<ExactMatrix> sn_permutation_generators(unsigned n);

ExactMatrix minus_identity(std::size_t dim);

}  // namespace hhweyl
