#include "hhweyl/builtin.hpp"

#include "hhweyl/errors.hpp"

namespace hhweyl {

ExactMatrix double_representation(const ExactMatrix& g) {
  if (g.rows() != g.cols()) throw DimensionMismatch("doubling needs a square matrix");
  const std::size_t n = g.rows();
  const ExactMatrix dual = mat_inverse(g).transpose();
  ExactMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = g.at(i, j);
      out.at(n + i, n + j) = dual.at(i, j);
    }
  return out;
}

std::vector<ExactMatrix> double_representation(const std::vector<ExactMatrix>& gens) {
  std::vector<ExactMatrix> out;
  out.reserve(gens.size());
  for (const ExactMatrix& g : gens) out.push_back(double_representation(g));
  return out;
}

ExactMatrix permutation_matrix(const std::vector<std::uint32_t>& images) {
  const std::size_t n = images.size();
  ExactMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (images[j] >= n) throw DimensionMismatch("permutation image out of range");
    m.at(images[j], j) = Cyclotomic(1);
  }
  return m;
}

std::vector<ExactMatrix> cyclic_sl2_generators(unsigned m) {
  ExactMatrix g(2, 2);
  g.at(0, 0) = Cyclotomic::root_of_unity(m);
  g.at(1, 1) = Cyclotomic::root_of_unity(m, static_cast<long>(m) - 1);
  return {g};
}

std::vector<ExactMatrix> quaternion_generators() {
  ExactMatrix a(2, 2);
  a.at(0, 0) = Cyclotomic::root_of_unity(4);
  a.at(1, 1) = Cyclotomic::root_of_unity(4, 3);
  ExactMatrix b(2, 2);
  b.at(0, 1) = Cyclotomic(1);
  b.at(1, 0) = Cyclotomic(-1);
  return {a, b};
}

std::vector<ExactMatrix> s3_reflection_generators() {
  ExactMatrix t(2, 2);
  t.at(0, 0) = Cyclotomic(-1);
  t.at(0, 1) = Cyclotomic(1);
  t.at(1, 1) = Cyclotomic(1);
  ExactMatrix r(2, 2);
  r.at(0, 1) = Cyclotomic(-1);
  r.at(1, 0) = Cyclotomic(1);
  r.at(1, 1) = Cyclotomic(-1);
  return {t, r};
}

std::vector<ExactMatrix> sn_permutation_generators(unsigned n) {
  if (n < 2) throw DimensionMismatch("need at least two letters");
  std::vector<std::uint32_t> swap01(n), cycle(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return {permutation_matrix(swap01), permutation_matrix(cycle)};
}

ExactMatrix minus_identity(std::size_t dim) {
  ExactMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Cyclotomic(-1);
  return m;
}

}  // namespace hhweyl
