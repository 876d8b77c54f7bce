#include "hhweyl/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <utility>

#include "hhweyl/errors.hpp"

namespace hhweyl {

std::uint32_t FiniteMatrixGroup::product_index(std::uint32_t i, std::uint32_t j) const {
  std::vector<std::uint32_t> word;
  for (std::uint32_t x = j; x != 0; x = parent[x]) word.push_back(via_gen[x]);
  std::uint32_t r = i;
  for (std::size_t t = word.size(); t-- > 0;) r = gen_step[r][word[t]];
  return r;
}

std::uint32_t FiniteMatrixGroup::element_order(std::uint32_t i) const {
  std::uint32_t ord = 1;
  for (std::uint32_t j = i; j != 0; j = product_index(j, i)) ++ord;
  return ord;
}

FiniteMatrixGroup close_group(const std::vector<ExactMatrix>& generators, std::size_t cap) {
  if (generators.empty())
    throw Error(Error::Kind::Input, "group closure needs at least one generator");
  const std::size_t dim = generators[0].rows();
  if (dim == 0 || dim % 2 != 0)
    throw DimensionMismatch("generators must have positive even size, got " + std::to_string(dim));
  unsigned ambient = 1;
  for (const ExactMatrix& g : generators) {
    if (g.rows() != dim || g.cols() != dim)
      throw DimensionMismatch("generators must all be square of the same size");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        ambient = std::lcm(ambient, g.at(i, j).conductor());
  }
  for (std::size_t s = 0; s < generators.size(); ++s) {
    try {
      mat_inverse(generators[s]);
    } catch (const SingularMatrix&) {
      throw NonInvertibleGenerator("generator " + std::to_string(s) + " is singular");
    }
  }

  FiniteMatrixGroup g;
  g.dim = dim;
  g.ambient = ambient;
  g.generators = generators;

  std::unordered_map<std::string, std::uint32_t> index_of;
  g.elements.push_back(ExactMatrix::identity(dim));
  g.parent.push_back(0);
  g.via_gen.push_back(0);
  index_of.emplace(g.elements[0].key(ambient), 0);

  std::queue<std::uint32_t> pending;
  pending.push(0);
  g.gen_step.emplace_back(generators.size(), 0);
  while (!pending.empty()) {
    const std::uint32_t i = pending.front();
    pending.pop();
    for (std::size_t s = 0; s < generators.size(); ++s) {
      ExactMatrix prod = g.elements[i] * generators[s];
      std::string key = prod.key(ambient);
      auto it = index_of.find(key);
      std::uint32_t idx;
      if (it != index_of.end()) {
        idx = it->second;
      } else {
        if (g.elements.size() >= cap)
          throw GroupTooLarge("group closure exceeded the cap of " + std::to_string(cap) +
                              " elements");
        idx = static_cast<std::uint32_t>(g.elements.size());
        g.elements.push_back(std::move(prod));
        g.parent.push_back(i);
        g.via_gen.push_back(static_cast<std::uint32_t>(s));
        g.gen_step.emplace_back(generators.size(), 0);
        index_of.emplace(std::move(key), idx);
        pending.push(idx);
      }
      g.gen_step[i][s] = idx;
    }
  }

  g.generator_index.reserve(generators.size());
  for (std::size_t s = 0; s < generators.size(); ++s)
    g.generator_index.push_back(g.gen_step[0][s]);

  g.inverse_of.resize(g.elements.size());
  for (std::uint32_t i = 0; i < g.elements.size(); ++i) {
    const auto it = index_of.find(mat_inverse(g.elements[i]).key(ambient));
    if (it == index_of.end())
      throw Error(Error::Kind::Check, "closure is not inverse-closed; ambient conductor bug");
    g.inverse_of[i] = it->second;
  }
  return g;
}

SymplecticReport verify_symplectic(const FiniteMatrixGroup& g) {
  const std::size_t n = g.dim / 2;
  ExactMatrix J(g.dim, g.dim);
  for (std::size_t i = 0; i < n; ++i) {
    J.at(i, n + i) = Cyclotomic(1);
    J.at(n + i, i) = Cyclotomic(-1);
  }
  for (std::size_t s = 0; s < g.generators.size(); ++s) {
    const ExactMatrix& m = g.generators[s];
    if (m.transpose() * J * m != J) return {false, s};
  }
  return {true, 0};
}

unsigned filtration_degree(const ExactMatrix& el, bool require_even) {
  if (el.rows() != el.cols()) throw DimensionMismatch("filtration degree needs a square matrix");
  const std::size_t fixed = kernel_dim(el - ExactMatrix::identity(el.rows()));
  const unsigned d = static_cast<unsigned>(el.rows() - fixed);
  if (require_even && d % 2 != 0)
    throw OddFilterDegree("filtration degree " + std::to_string(d) +
                          " is odd; the element does not preserve a symplectic form");
  return d;
}

ClassData conjugacy_classes(const FiniteMatrixGroup& g, bool require_even_d) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  ClassData out;
  out.class_of.assign(n, kUnassigned);

  for (std::uint32_t i = 0; i < n; ++i) {
    if (out.class_of[i] != kUnassigned) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(out.classes.size());
    ConjClass cls;
    cls.representative = i;
    out.class_of[i] = c;
    cls.members.push_back(i);
    // Orbit of i under conjugation by the generators is the whole class.
    std::vector<std::uint32_t> stack{i};
    while (!stack.empty()) {
      const std::uint32_t y = stack.back();
      stack.pop_back();
      for (const std::uint32_t s : g.generator_index) {
        const std::uint32_t z = g.product_index(g.product_index(s, y), g.inverse_of[s]);
        if (out.class_of[z] == kUnassigned) {
          out.class_of[z] = c;
          cls.members.push_back(z);
          stack.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.order = g.element_order(i);
    cls.d = filtration_degree(g.elements[i], require_even_d);
    out.classes.push_back(std::move(cls));
  }

  // Power maps need every class assigned first.
  out.power_maps.resize(out.classes.size());
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    const std::uint32_t r = out.classes[c].representative;
    std::uint32_t p = 0;
    out.power_maps[c].reserve(out.classes[c].order);
    for (std::uint32_t k = 0; k < out.classes[c].order; ++k) {
      out.power_maps[c].push_back(out.class_of[p]);
      p = g.product_index(p, r);
    }
  }
  return out;
}

bool all_permutation_matrices(const FiniteMatrixGroup& g) {
  const Cyclotomic one(1);
  for (const ExactMatrix& m : g.elements) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        const Cyclotomic& e = m.at(i, j);
        if (e == one)
          ++ones;
        else if (!e.is_zero())
          return false;
      }
      if (ones != 1) return false;
    }
  }
  return true;
}

std::string class_display_label(const FiniteMatrixGroup& g, const ClassData& cd, std::uint32_t c,
                                bool permutation_group) {
  if (permutation_group) return cycle_label(g.elements[cd.classes[c].representative]);
  return "C" + std::to_string(c) + "(d=" + std::to_string(cd.classes[c].d) +
         ",size=" + std::to_string(cd.classes[c].members.size()) + ")";
}

std::string cycle_label(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  const Cyclotomic one(1);
  std::vector<std::size_t> image(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m.at(i, j) == one) {
        image[j] = i;
        break;
      }
    }
    if (image[j] == n) throw Error(Error::Kind::Input, "not a permutation matrix");
  }
  std::string out;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start] || image[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = image[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace hhweyl
