// Acceptance gate: ten end-to-end checks, one line of output each.
// Exits nonzero if any of them fails.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hhweyl/builtin.hpp"
#include "hhweyl/center.hpp"
#include "hhweyl/chartab.hpp"
#include "hhweyl/cyclotomic.hpp"
#include "hhweyl/errors.hpp"
#include "hhweyl/fhring.hpp"
#include "hhweyl/group.hpp"
#include "hhweyl/symfunc.hpp"

using namespace hhweyl;

namespace {

Partition P(std::initializer_list<unsigned> parts) {
  return Partition(std::vector<unsigned>(parts));
}

struct Pipeline {
  std::string name;
  FiniteMatrixGroup g;
  ClassData cd;
  GradedCenterRing ring;
};

Pipeline build(std::string name, const std::vector<ExactMatrix>& gens) {
  Pipeline p{std::move(name), close_group(gens, kDefaultClosureCap), {}, {}};
  p.cd = conjugacy_classes(p.g);
  CenterTable ct = center_structure_constants(p.g, p.cd);
  p.ring = graded_center_ring(p.g, p.cd, ct);
  return p;
}

// every group the first five criteria talk about
std::vector<Pipeline> small_corpus() {
  std::vector<Pipeline> out;
  out.push_back(build("Z/2", {minus_identity(2)}));
  for (unsigned m = 3; m <= 12; ++m)
    out.push_back(build("Z/" + std::to_string(m), cyclic_sl2_generators(m)));
  out.push_back(build("Q8", quaternion_generators()));
  out.push_back(build("S3 doubled", double_representation(s3_reflection_generators())));
  return out;
}

using Terms = std::map<std::size_t, std::uint64_t>;

Terms product_at(const GradedCenterRing& ring, std::size_t i, std::size_t j) {
  Terms out;
  for (const auto& [k, c] : ring.table[i][j]) out[k] = c;
  return out;
}

bool commutative_and_associative(const GradedCenterRing& ring) {
  std::size_t m = ring.basis.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (ring.table[i][j] != ring.table[j][i]) return false;
      for (std::size_t k = 0; k < m; ++k) {
        Terms left, right;
        for (const auto& [p, c] : ring.table[i][j])
          for (const auto& [q, n] : ring.table[p][k]) left[q] += c * n;
        for (const auto& [p, c] : ring.table[j][k])
          for (const auto& [q, n] : ring.table[i][p]) right[q] += c * n;
        if (left != right) return false;
      }
    }
  return true;
}

// Recompute class-sum products by full convolution in the group algebra and
// check both the structure constants and their degree-additive truncation.
bool convolution_oracle(const FiniteMatrixGroup& g, const ClassData& cd,
                        const GradedCenterRing& ring) {
  CenterTable ct = center_structure_constants(g, cd);
  std::size_t nc = cd.classes.size();
  for (std::uint32_t c = 0; c < nc; ++c)
    for (std::uint32_t cp = 0; cp < nc; ++cp) {
      std::vector<std::uint64_t> counts(nc, 0);
      for (std::uint32_t x : cd.classes[c].members)
        for (std::uint32_t y : cd.classes[cp].members)
          ++counts[cd.class_of[g.product_index(x, y)]];
      Terms graded;
      for (std::uint32_t cpp = 0; cpp < nc; ++cpp) {
        if (counts[cpp] != ct.coefficient(c, cp, cpp) * cd.classes[cpp].size())
          return false;
        if (counts[cpp] != 0 && cd.classes[cpp].d == cd.classes[c].d + cd.classes[cp].d)
          graded[ring.position_of_class(cpp)] =
              counts[cpp] / cd.classes[cpp].size();
      }
      if (graded != product_at(ring, ring.position_of_class(c),
                               ring.position_of_class(cp)))
        return false;
    }
  return true;
}

int failures = 0;

void criterion(int number, const std::string& claim,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  if (ok) {
    std::cout << "PASS criterion " << number << ": " << claim << "\n";
  } else {
    ++failures;
    std::cout << "FAIL criterion " << number << ": " << claim
              << (detail.empty() ? "" : " [" + detail + "]") << "\n";
  }
}

}  // namespace

int main() {
  std::vector<Pipeline> corpus = small_corpus();
  const Pipeline& z2 = corpus.front();
  const Pipeline& q8 = corpus[11];
  const Pipeline& s3d = corpus[12];

  criterion(1, "order-two center has betti [1,0,1] and a square-zero generator",
            [&](std::string& detail) {
              if (z2.ring.betti != std::vector<std::size_t>{1, 0, 1}) {
                detail = "betti off";
                return false;
              }
              if (z2.ring.basis.size() != 2 || z2.ring.basis[1].degree != 2) {
                detail = "basis off";
                return false;
              }
              return z2.ring.table[1][1].empty();
            });

  criterion(2, "doubled S3 center is Z[x,y]/(x^2-3y, xy, y^2) with betti [1,0,1,0,1]",
            [&](std::string& detail) {
              if (s3d.ring.betti != std::vector<std::size_t>{1, 0, 1, 0, 1}) {
                detail = "betti off";
                return false;
              }
              Terms xx = product_at(s3d.ring, 1, 1);
              if (xx != Terms{{2, 3}}) {
                detail = "x*x is not 3*y";
                return false;
              }
              return s3d.ring.table[1][2].empty() && s3d.ring.table[2][2].empty();
            });

  criterion(3, "cyclic groups in SL2 give betti [1,0,m-1] and trivial products",
            [&](std::string& detail) {
              for (unsigned m = 2; m <= 12; ++m) {
                const Pipeline& run = m == 2 ? corpus[0] : corpus[m - 2];
                if (run.ring.betti != std::vector<std::size_t>{1, 0, m - 1}) {
                  detail = "betti off at m = " + std::to_string(m);
                  return false;
                }
                for (std::size_t i = 1; i < run.ring.basis.size(); ++i)
                  for (std::size_t j = i; j < run.ring.basis.size(); ++j)
                    if (!run.ring.table[i][j].empty()) {
                      detail = "nonzero product at m = " + std::to_string(m);
                      return false;
                    }
              }
              return true;
            });

  criterion(4, "quaternion group gives betti [1,0,4], one less than its class count",
            [&](std::string& detail) {
              if (q8.ring.betti != std::vector<std::size_t>{1, 0, 4}) {
                detail = "betti off";
                return false;
              }
              if (q8.ring.betti[2] + 1 != q8.cd.classes.size()) {
                detail = "class count off";
                return false;
              }
              return true;
            });

  criterion(5, "degrees recovered from characters match the fixed-space degrees",
            [&](std::string& detail) {
              for (const Pipeline& run : corpus) {
                CharacterTable t = character_from_group(run.g, run.cd);
                std::vector<unsigned> d = d_from_character_all(t);
                for (std::size_t c = 0; c < run.cd.classes.size(); ++c)
                  if (d[c] != run.cd.classes[c].d) {
                    detail = run.name;
                    return false;
                  }
              }
              return true;
            });

  criterion(6, "transposition class squares: C(n,2), 3, 2 and nothing above weight 2",
            [](std::string& detail) {
              std::vector<std::uint64_t> want = {1, 3, 6, 10, 15, 21, 28};
              for (unsigned n = 2; n <= 8; ++n) {
                FHConstants f = fh_constants(P({1}), P({1}), n);
                std::uint64_t id = f.terms.count(P({})) ? f.terms.at(P({})) : 0;
                if (id != want[n - 2]) {
                  detail = "identity coefficient at n = " + std::to_string(n);
                  return false;
                }
                if (n >= 3 && f.terms.at(P({2})) != 3) {
                  detail = "3-cycle coefficient at n = " + std::to_string(n);
                  return false;
                }
                if (n >= 4 && f.terms.at(P({1, 1})) != 2) {
                  detail = "double-transposition coefficient at n = " + std::to_string(n);
                  return false;
                }
                for (const auto& [nu, a] : f.terms)
                  if (a != 0 && nu.weight() > 2) {
                    detail = "term above weight 2 at n = " + std::to_string(n);
                    return false;
                  }
              }
              return true;
            });

  criterion(7, "inverse series starts -h1, 2h1^2-h2; the involution squares to one",
            [](std::string& detail) {
              if (!same_function(hstar(1), scale(SymFunc::h(P({1})), Rational(-1)))) {
                detail = "first coefficient";
                return false;
              }
              SymFunc want = add(scale(SymFunc::h(P({1, 1})), Rational(2)),
                                 scale(SymFunc::h(P({2})), Rational(-1)));
              if (!same_function(hstar(2), want)) {
                detail = "second coefficient";
                return false;
              }
              for (unsigned w = 0; w <= 8; ++w)
                for (const auto& lam : partitions_of(w)) {
                  SymFunc h = SymFunc::h(lam);
                  if (!same_function(psi(psi(h)), h)) {
                    detail = "involution at " + lam.str();
                    return false;
                  }
                }
              if (!same_function(g_basis(P({1})),
                                 scale(SymFunc::h(P({1})), Rational(-1)))) {
                detail = "dual basis in weight one";
                return false;
              }
              return true;
            });

  criterion(8, "dual-basis products equal stable class-sum products, weight up to 6",
            [](std::string& detail) {
              std::vector<Partition> pool;
              for (unsigned w = 0; w <= 6; ++w)
                for (const auto& p : partitions_of(w)) pool.push_back(p);
              for (std::size_t i = 0; i < pool.size(); ++i)
                for (std::size_t j = i; j < pool.size(); ++j) {
                  if (pool[i].weight() + pool[j].weight() > 6) continue;
                  MacdonaldReport r = macdonald_check(pool[i], pool[j]);
                  if (!r.ok()) {
                    detail = pool[i].str() + " x " + pool[j].str();
                    return false;
                  }
                }
              return true;
            });

  criterion(9, "doubled permutation pipeline matches graded class-sum constants",
            [](std::string& detail) {
              Cyclotomic one = parse_cyclotomic("1");
              for (unsigned n = 3; n <= 5; ++n) {
                Pipeline run = build("S" + std::to_string(n) + " doubled",
                                     double_representation(sn_permutation_generators(n)));
                std::size_t nc = run.cd.classes.size();

                std::vector<Partition> stable;
                std::map<Partition, std::uint32_t> class_of_stable;
                for (std::uint32_t c = 0; c < nc; ++c) {
                  const ExactMatrix& m = run.g.elements[run.cd.classes[c].representative];
                  std::vector<std::uint32_t> images(n);
                  for (unsigned j = 0; j < n; ++j)
                    for (unsigned i = 0; i < n; ++i)
                      if (m.at(i, j) == one) {
                        images[j] = i;
                        break;
                      }
                  Partition st = stable_type(Permutation{images});
                  if (run.cd.classes[c].d != 2 * st.weight()) {
                    detail = "degree is not twice the stable weight";
                    return false;
                  }
                  stable.push_back(st);
                  class_of_stable[st] = c;
                }

                for (std::uint32_t a = 0; a < nc; ++a)
                  for (std::uint32_t b = 0; b < nc; ++b) {
                    FHConstants f = fh_constants(stable[a], stable[b], n);
                    Terms expect;
                    for (const auto& [nu, coeff] : f.terms) {
                      if (coeff == 0) continue;
                      if (nu.weight() != stable[a].weight() + stable[b].weight())
                        continue;
                      auto hit = class_of_stable.find(nu);
                      if (hit == class_of_stable.end()) {
                        detail = "missing class for " + nu.str();
                        return false;
                      }
                      expect[run.ring.position_of_class(hit->second)] = coeff;
                    }
                    Terms got = product_at(run.ring,
                                           run.ring.position_of_class(a),
                                           run.ring.position_of_class(b));
                    if (got != expect) {
                      detail = "n = " + std::to_string(n) + ", " + stable[a].str() +
                               " x " + stable[b].str();
                      return false;
                    }
                  }
              }
              return true;
            });

  criterion(10, "filtration, parity, ring laws and the convolution oracle hold",
            [&](std::string& detail) {
              std::vector<Pipeline> wide;
              for (Pipeline& p : corpus) wide.push_back(std::move(p));
              wide.push_back(build("S4 doubled",
                                   double_representation(sn_permutation_generators(4))));
              wide.push_back(build("S5 doubled",
                                   double_representation(sn_permutation_generators(5))));
              for (const Pipeline& run : wide) {
                if (run.g.order() <= 500) {
                  FiltrationReport rep = filtration_check(run.g, run.cd);
                  if (!rep.passed || !rep.exhaustive) {
                    detail = run.name + ": filtration";
                    return false;
                  }
                }
                for (const auto& cls : run.cd.classes)
                  if (cls.d % 2 != 0) {
                    detail = run.name + ": odd degree";
                    return false;
                  }
                if (!commutative_and_associative(run.ring)) {
                  detail = run.name + ": ring laws";
                  return false;
                }
                std::size_t total = 0;
                for (std::size_t k : run.ring.betti) total += k;
                if (total != run.cd.classes.size() ||
                    run.ring.betti.size() != run.g.dim + 1) {
                  detail = run.name + ": dimension bookkeeping";
                  return false;
                }
                require_crosschecks(run.ring, run.g, run.cd);
                if (run.g.order() <= 200 &&
                    !convolution_oracle(run.g, run.cd, run.ring)) {
                  detail = run.name + ": convolution oracle";
                  return false;
                }
              }
              return true;
            });

  if (failures == 0) {
    std::cout << "acceptance: all 10 criteria hold\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " of 10 criteria FAILED\n";
  return 1;
}
