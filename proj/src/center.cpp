#include "hhweyl/center.hpp"

#include <algorithm>
#include <random>

#include "hhweyl/errors.hpp"

namespace hhweyl {

std::uint64_t CenterTable::coefficient(std::uint32_t c, std::uint32_t cp,
                                       std::uint32_t cpp) const {
  const auto& list = constants[c][cp];
  const auto it = std::lower_bound(
      list.begin(), list.end(), cpp,
      [](const std::pair<std::uint32_t, std::uint64_t>& e, std::uint32_t k) { return e.first < k; });
  return (it != list.end() && it->first == cpp) ? it->second : 0;
}

CenterTable center_structure_constants(const FiniteMatrixGroup& g, const ClassData& cd) {
  const std::size_t s = cd.classes.size();
  CenterTable ct;
  ct.constants.assign(s, std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>>(s));
  std::vector<std::uint64_t> buf(s);
  for (std::uint32_t cpp = 0; cpp < s; ++cpp) {
    const std::uint32_t z = cd.classes[cpp].representative;
    for (std::uint32_t c = 0; c < s; ++c) {
      std::fill(buf.begin(), buf.end(), 0);
      for (const std::uint32_t x : cd.classes[c].members)
        ++buf[cd.class_of[g.product_index(g.inverse_of[x], z)]];
      for (std::uint32_t cp = 0; cp < s; ++cp)
        if (buf[cp]) ct.constants[c][cp].emplace_back(cpp, buf[cp]);
    }
  }
  return ct;
}

FiltrationReport filtration_check(const FiniteMatrixGroup& g, const ClassData& cd,
                                  std::size_t full_threshold, std::uint64_t seed) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<unsigned> d(n);
  for (std::uint32_t i = 0; i < n; ++i) d[i] = cd.classes[cd.class_of[i]].d;

  FiltrationReport rep;
  const auto check_pair = [&](std::uint32_t i, std::uint32_t j) {
    if (!rep.passed) return;
    if (d[g.product_index(i, j)] > d[i] + d[j]) {
      rep.passed = false;
      rep.witness_i = i;
      rep.witness_j = j;
      return;
    }
    ++rep.checked_pairs;
  };

  if (g.order() <= full_threshold) {
    for (std::uint32_t i = 0; i < n && rep.passed; ++i)
      for (std::uint32_t j = 0; j < n && rep.passed; ++j) check_pair(i, j);
  } else {
    rep.exhaustive = false;
    for (const auto& cls : cd.classes) {
      for (std::uint32_t j = 0; j < n && rep.passed; ++j) {
        check_pair(cls.representative, j);
        check_pair(j, cls.representative);
      }
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 20000 && rep.passed; ++t)
      check_pair(static_cast<std::uint32_t>(rng() % n), static_cast<std::uint32_t>(rng() % n));
  }
  return rep;
}

void require_filtration(const FiniteMatrixGroup& g, const ClassData& cd,
                        std::size_t full_threshold) {
  const FiltrationReport rep = filtration_check(g, cd, full_threshold);
  if (!rep.passed)
    throw FiltrationViolation("filtration subadditivity fails for element pair (" +
                              std::to_string(rep.witness_i) + ", " +
                              std::to_string(rep.witness_j) + ")");
}

std::size_t GradedCenterRing::position_of_class(std::uint32_t class_index) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].class_index == class_index) return i;
  throw Error(Error::Kind::Input, "class index not in basis");
}

GradedCenterRing graded_center_ring(const FiniteMatrixGroup& g, const ClassData& cd,
                                    const CenterTable& ct) {
  require_filtration(g, cd);
  const std::size_t s = cd.classes.size();
  GradedCenterRing ring;
  ring.matrix_size = static_cast<unsigned>(g.dim);
  ring.betti.assign(g.dim + 1, 0);
  for (const auto& cls : cd.classes) ++ring.betti[cls.d];

  const bool permutation_group = all_permutation_matrices(g);
  std::vector<std::uint32_t> order(s);
  for (std::uint32_t c = 0; c < s; ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (cd.classes[a].d != cd.classes[b].d) return cd.classes[a].d < cd.classes[b].d;
    return a < b;
  });
  std::vector<std::size_t> pos_of(s);
  for (std::size_t i = 0; i < s; ++i) {
    const std::uint32_t c = order[i];
    pos_of[c] = i;
    ring.basis.push_back({c, cd.classes[c].d, cd.classes[c].size(),
                          class_display_label(g, cd, c, permutation_group)});
  }

  ring.table.assign(s, std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>>(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const unsigned want = ring.basis[i].degree + ring.basis[j].degree;
      std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;
      for (const auto& [cpp, coeff] : ct.constants[ring.basis[i].class_index]
                                                  [ring.basis[j].class_index]) {
        if (cd.classes[cpp].d == want)
          terms.emplace_back(static_cast<std::uint32_t>(pos_of[cpp]), coeff);
      }
      std::sort(terms.begin(), terms.end());
      ring.table[i][j] = std::move(terms);
    }
  }
  return ring;
}

CrosscheckReport betti_crosschecks(const GradedCenterRing& ring, const FiniteMatrixGroup& g,
                                   const ClassData& cd) {
  CrosscheckReport rep;
  std::size_t total = 0;
  for (const std::size_t b : ring.betti) total += b;
  rep.dimension_sum_matches = (total == cd.classes.size());

  // Re-derive the counts from fixed-space dimensions, bypassing the stored
  // degrees: betti[k] must equal the number of classes whose representative
  // fixes a subspace of codimension k.
  std::vector<std::size_t> by_codim(g.dim + 1, 0);
  for (const auto& cls : cd.classes) {
    const std::size_t fixed =
        kernel_dim(g.elements[cls.representative] - ExactMatrix::identity(g.dim));
    ++by_codim[g.dim - fixed];
  }
  rep.independent_count_matches = (by_codim == ring.betti);

  for (std::size_t k = 1; k < ring.betti.size(); k += 2)
    if (ring.betti[k] != 0) rep.odd_degrees_empty = false;

  if (g.dim == 2) {
    rep.dim2_rule_checked = true;
    rep.dim2_rule_holds = (ring.betti[2] == cd.classes.size() - 1);
  }
  return rep;
}

void require_crosschecks(const GradedCenterRing& ring, const FiniteMatrixGroup& g,
                         const ClassData& cd, bool expect_even) {
  const CrosscheckReport rep = betti_crosschecks(ring, g, cd);
  std::string bad;
  if (!rep.dimension_sum_matches) bad += " dimension-sum";
  if (!rep.independent_count_matches) bad += " fixed-space-recount";
  if (expect_even && !rep.odd_degrees_empty) bad += " odd-degree";
  if (rep.dim2_rule_checked && expect_even && !rep.dim2_rule_holds) bad += " dim2-rule";
  if (!bad.empty()) throw CrosscheckFailure("betti crosschecks failed:" + bad);
}

std::string basis_symbol(std::size_t position) {
  static const char* names[] = {"1", "x", "y", "z", "u", "v", "w"};
  if (position < 7) return names[position];
  return "b" + std::to_string(position);
}

std::string render_mult_table(const GradedCenterRing& ring) {
  std::string out;
  out += "basis:\n";
  for (std::size_t i = 0; i < ring.basis.size(); ++i) {
    out += "  " + basis_symbol(i) + " = class " + std::to_string(ring.basis[i].class_index) +
           " " + ring.basis[i].label + "  degree " + std::to_string(ring.basis[i].degree) +
           "  size " + std::to_string(ring.basis[i].size) + "\n";
  }
  out += "products:\n";
  for (std::size_t i = 0; i < ring.basis.size(); ++i) {
    if (ring.basis[i].degree == 0) continue;
    for (std::size_t j = i; j < ring.basis.size(); ++j) {
      if (ring.basis[j].degree == 0) continue;
      out += "  " + basis_symbol(i) + "*" + basis_symbol(j) + " = ";
      if (ring.table[i][j].empty()) {
        out += "0\n";
        continue;
      }
      bool first = true;
      for (const auto& [k, coeff] : ring.table[i][j]) {
        if (!first) out += " + ";
        first = false;
        if (coeff != 1) out += std::to_string(coeff) + "*";
        out += basis_symbol(k);
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace hhweyl
