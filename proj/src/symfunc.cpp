#include "hhweyl/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <vector>

#include "hhweyl/errors.hpp"

namespace hhweyl {

namespace {

void prune(std::map<Partition, Rational>& terms, unsigned cap) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0 || it->first.weight() > cap)
      it = terms.erase(it);
    else
      ++it;
  }
}

void require_same_cap(const SymFunc& f, const SymFunc& g, const char* op) {
  if (f.cap != g.cap)
    throw Error(Error::Kind::Input, std::string(op) + ": weight caps differ (" +
                                        std::to_string(f.cap) + " vs " +
                                        std::to_string(g.cap) + ")");
}

Partition concat_parts(const Partition& a, const Partition& b) {
  std::vector<unsigned> parts = a.parts;
  parts.insert(parts.end(), b.parts.begin(), b.parts.end());
  return Partition(std::move(parts));
}

void all_exponent_vectors(unsigned degree, unsigned nvars, std::vector<unsigned>& cur,
                          std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == nvars) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    cur.push_back(e);
    all_exponent_vectors(degree - e, nvars, cur, out);
    cur.pop_back();
  }
}

// Monomial-basis coefficients of h_lam, by literal expansion of the product
// of complete homogeneous polynomials in weight(lam) variables. That many
// variables is enough: a degree-w monomial touches at most w of them. Only
// weakly decreasing exponent vectors are read off, one per partition.
const std::map<Partition, Rational>& h_in_m(const Partition& lam) {
  static std::map<Partition, std::map<Partition, Rational>> cache;
  static std::mutex lock;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }

  unsigned nvars = std::max(1u, lam.weight());
  std::map<std::vector<unsigned>, BigInt> poly;
  poly[std::vector<unsigned>(nvars, 0)] = 1;
  for (unsigned part : lam.parts) {
    std::vector<std::vector<unsigned>> monomials;
    std::vector<unsigned> scratch;
    all_exponent_vectors(part, nvars, scratch, monomials);
    std::map<std::vector<unsigned>, BigInt> next;
    for (const auto& [expo, coeff] : poly) {
      for (const auto& mono : monomials) {
        std::vector<unsigned> sum(nvars);
        for (unsigned i = 0; i < nvars; ++i) sum[i] = expo[i] + mono[i];
        next[std::move(sum)] += coeff;
      }
    }
    poly = std::move(next);
  }

  std::map<Partition, Rational> result;
  for (const auto& [expo, coeff] : poly) {
    if (!std::is_sorted(expo.begin(), expo.end(), std::greater<unsigned>())) continue;
    result.emplace(Partition(std::vector<unsigned>(expo)), Rational(coeff));
  }

  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(lam, std::move(result)).first->second;
}

using RatMatrix = std::vector<std::vector<Rational>>;

// Exact Gauss-Jordan inverse; empty result signals a singular input.
RatMatrix rat_inverse(RatMatrix a) {
  std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational inv_p = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= inv_p;
      inv[col][j] *= inv_p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<Partition> sorted_partitions_of(unsigned w) {
  std::vector<Partition> all = partitions_of(w);
  std::sort(all.begin(), all.end());
  return all;
}

// Per-weight data for the m -> h change of basis: the matrix
// A[k][u] = coefficient of m_k in h_u over the sorted partition list,
// together with its inverse.
struct WeightBlock {
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  RatMatrix h2m;      // columns are h_u expansions
  RatMatrix h2m_inv;
};

const WeightBlock& weight_block(unsigned w) {
  static std::map<unsigned, WeightBlock> cache;
  static std::mutex lock;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }

  WeightBlock block;
  block.parts = sorted_partitions_of(w);
  std::size_t n = block.parts.size();
  for (std::size_t i = 0; i < n; ++i) block.index.emplace(block.parts[i], i);
  block.h2m.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto& [kappa, c] : h_in_m(block.parts[u]))
      block.h2m[block.index.at(kappa)][u] = c;
  }
  block.h2m_inv = rat_inverse(block.h2m);
  if (block.h2m_inv.empty())
    throw SingularDualityBlock("complete-to-monomial matrix singular at weight " +
                               std::to_string(w));

  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(w, std::move(block)).first->second;
}

// Homogeneous pieces of ring elements during series inversion, h-basis.
using LElem = std::map<Partition, Rational>;

LElem lmul(const LElem& a, const LElem& b) {
  LElem out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      Rational c = ca * cb;
      if (c == 0) continue;
      Partition key = concat_parts(pa, pb);
      auto [it, fresh] = out.emplace(std::move(key), c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

// hstar(0..k) in the h-basis. The defining series u = sum h_i t^{i+1} is
// inverted term by term: the residual r = t - sum_{i<k} hstar(i) u^{i+1}
// starts at order k+1 in t, and its leading coefficient is hstar(k).
std::vector<LElem> hstars_up_to(unsigned k) {
  static std::vector<LElem> memo;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  if (memo.size() > k) return {memo.begin(), memo.begin() + k + 1};

  unsigned hi = k + 2;  // series truncated above t^hi
  std::vector<LElem> u(hi + 1);
  for (unsigned j = 1; j <= hi; ++j) {
    std::vector<unsigned> parts;
    if (j >= 2) parts.push_back(j - 1);
    u[j] = {{Partition(std::move(parts)), Rational(1)}};
  }
  std::vector<LElem> upow = u;               // u^(m+1) as m advances
  std::vector<LElem> residual(hi + 1);
  residual[1] = {{Partition(), Rational(1)}};  // the series t itself

  memo.clear();
  for (unsigned m = 0; m <= k; ++m) {
    if (m > 0) {
      std::vector<LElem> next(hi + 1);
      for (unsigned a = 1; a <= hi; ++a) {
        if (upow[a].empty()) continue;
        for (unsigned b = 1; a + b <= hi; ++b) {
          if (u[b].empty()) continue;
          LElem prod = lmul(upow[a], u[b]);
          for (auto& [p, c] : prod) {
            auto [it, fresh] = next[a + b].emplace(p, c);
            if (!fresh) {
              it->second += c;
              if (it->second == 0) next[a + b].erase(it);
            }
          }
        }
      }
      upow = std::move(next);
    }
    LElem coeff = residual[m + 1];
    for (unsigned j = m + 1; j <= hi; ++j) {
      if (upow[j].empty()) continue;
      LElem sub = lmul(coeff, upow[j]);
      for (auto& [p, c] : sub) {
        auto [it, fresh] = residual[j].emplace(p, -c);
        if (!fresh) {
          it->second -= c;
          if (it->second == 0) residual[j].erase(it);
        }
      }
    }
    memo.push_back(std::move(coeff));
  }
  return memo;
}

LElem hstar_elem(unsigned i) {
  std::vector<LElem> all = hstars_up_to(i);
  return all[i];
}

// Duality data at one weight: D[k][u] = coefficient of m_k in the product
// hstar(u_1)...hstar(u_l), plus its inverse, whose rows are the g basis.
struct DualBlock {
  RatMatrix pairing;       // rows kappa, columns mu
  RatMatrix pairing_inv;
};

const DualBlock& dual_block(unsigned w) {
  static std::map<unsigned, DualBlock> cache;
  static std::mutex lock;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }

  const WeightBlock& wb = weight_block(w);
  std::size_t n = wb.parts.size();
  DualBlock block;
  block.pairing.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t u = 0; u < n; ++u) {
    LElem prod = {{Partition(), Rational(1)}};
    for (unsigned part : wb.parts[u].parts) prod = lmul(prod, hstar_elem(part));
    // convert the h-expansion to the m basis
    for (const auto& [hpart, c] : prod) {
      for (const auto& [kappa, mc] : h_in_m(hpart))
        block.pairing[wb.index.at(kappa)][u] += c * mc;
    }
  }
  block.pairing_inv = rat_inverse(block.pairing);
  if (block.pairing_inv.empty())
    throw SingularDualityBlock("dual pairing block singular at weight " + std::to_string(w));

  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(w, std::move(block)).first->second;
}

}  // namespace

SymFunc SymFunc::zero(unsigned cap, Basis basis) {
  SymFunc f;
  f.cap = cap;
  f.basis = basis;
  return f;
}

SymFunc SymFunc::one(unsigned cap) { return h(Partition(), cap); }

SymFunc SymFunc::h(const Partition& lam, unsigned cap) {
  SymFunc f;
  f.cap = cap;
  f.basis = Basis::H;
  if (lam.weight() > cap)
    throw Error(Error::Kind::Input,
                "weight " + std::to_string(lam.weight()) + " exceeds cap " + std::to_string(cap));
  f.terms.emplace(lam, Rational(1));
  return f;
}

SymFunc SymFunc::m(const Partition& mu, unsigned cap) {
  SymFunc f = h(mu, cap);
  f.basis = Basis::M;
  return f;
}

unsigned SymFunc::top_weight() const {
  unsigned w = 0;
  for (const auto& [p, c] : terms) w = std::max(w, p.weight());
  return w;
}

Rational SymFunc::coefficient(const Partition& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? Rational(0) : it->second;
}

std::string SymFunc::str() const {
  if (terms.empty()) return "0";
  const char* tag = basis == Basis::H ? "h[" : "m[";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool constant = p.parts.empty();
    if (constant) {
      out << rational_str(a);
      continue;
    }
    if (a != 1) out << rational_str(a) << "*";
    out << tag;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      if (i) out << ",";
      out << p.parts[i];
    }
    out << "]";
  }
  return out.str();
}

SymFunc to_h(const SymFunc& f) {
  if (f.basis == SymFunc::Basis::H) return f;
  SymFunc out = SymFunc::zero(f.cap, SymFunc::Basis::H);
  for (const auto& [mu, c] : f.terms) {
    const WeightBlock& wb = weight_block(mu.weight());
    std::size_t col = wb.index.at(mu);
    // m_mu = sum_u inv[u][col] h_u
    for (std::size_t u = 0; u < wb.parts.size(); ++u) {
      Rational add = c * wb.h2m_inv[u][col];
      if (add == 0) continue;
      out.terms[wb.parts[u]] += add;
    }
  }
  prune(out.terms, out.cap);
  return out;
}

SymFunc to_m(const SymFunc& f) {
  if (f.basis == SymFunc::Basis::M) return f;
  SymFunc out = SymFunc::zero(f.cap, SymFunc::Basis::M);
  for (const auto& [lam, c] : f.terms) {
    for (const auto& [kappa, mc] : h_in_m(lam)) out.terms[kappa] += c * mc;
  }
  prune(out.terms, out.cap);
  return out;
}

SymFunc h_to_m(const Partition& lam, unsigned cap) {
  if (lam.weight() > cap)
    throw Error(Error::Kind::Input,
                "weight " + std::to_string(lam.weight()) + " exceeds cap " + std::to_string(cap));
  return to_m(SymFunc::h(lam, cap));
}

SymFunc add(const SymFunc& f, const SymFunc& g) {
  require_same_cap(f, g, "add");
  if (f.basis != g.basis) return add(to_h(f), to_h(g));
  SymFunc out = f;
  for (const auto& [p, c] : g.terms) out.terms[p] += c;
  prune(out.terms, out.cap);
  return out;
}

SymFunc scale(const SymFunc& f, const Rational& c) {
  SymFunc out = SymFunc::zero(f.cap, f.basis);
  if (c == 0) return out;
  for (const auto& [p, a] : f.terms) out.terms.emplace(p, a * c);
  return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  require_same_cap(f, g, "multiply");
  SymFunc fh = to_h(f);
  SymFunc gh = to_h(g);
  SymFunc out = SymFunc::zero(f.cap, SymFunc::Basis::H);
  for (const auto& [pa, ca] : fh.terms) {
    for (const auto& [pb, cb] : gh.terms) {
      if (pa.weight() + pb.weight() > out.cap) continue;  // graded truncation
      out.terms[concat_parts(pa, pb)] += ca * cb;
    }
  }
  prune(out.terms, out.cap);
  return out;
}

bool same_function(const SymFunc& f, const SymFunc& g) {
  return to_h(f).terms == to_h(g).terms;
}

Rational hall_pairing(const SymFunc& f, const SymFunc& g) {
  SymFunc fh = to_h(f);
  SymFunc gm = to_m(g);
  Rational total = 0;
  for (const auto& [p, c] : fh.terms) {
    auto it = gm.terms.find(p);
    if (it != gm.terms.end()) total += c * it->second;
  }
  return total;
}

SymFunc hstar(unsigned i, unsigned cap) {
  if (i > cap)
    throw Error(Error::Kind::Input,
                "weight " + std::to_string(i) + " exceeds cap " + std::to_string(cap));
  SymFunc out = SymFunc::zero(cap, SymFunc::Basis::H);
  out.terms = hstar_elem(i);
  return out;
}

SymFunc hstar_product(const Partition& mu, unsigned cap) {
  SymFunc out = SymFunc::one(cap);
  for (unsigned part : mu.parts) out = multiply(out, hstar(part, cap));
  return out;
}

SymFunc psi(const SymFunc& f) {
  SymFunc fh = to_h(f);
  SymFunc out = SymFunc::zero(f.cap, SymFunc::Basis::H);
  for (const auto& [lam, c] : fh.terms)
    out = add(out, scale(hstar_product(lam, f.cap), c));
  return out;
}

SymFunc g_basis(const Partition& lam, unsigned cap) {
  if (lam.weight() > cap)
    throw Error(Error::Kind::Input,
                "weight " + std::to_string(lam.weight()) + " exceeds cap " + std::to_string(cap));
  unsigned w = lam.weight();
  const WeightBlock& wb = weight_block(w);
  const DualBlock& db = dual_block(w);
  std::size_t row = wb.index.at(lam);
  // x solving x^T B = e_lam is the lam row of B^{-1}
  SymFunc out = SymFunc::zero(cap, SymFunc::Basis::H);
  for (std::size_t kappa = 0; kappa < wb.parts.size(); ++kappa) {
    const Rational& c = db.pairing_inv[row][kappa];
    if (c == 0) continue;
    out.terms.emplace(wb.parts[kappa], c);
  }
  return out;
}

std::map<Partition, Rational> expand_in_g(const SymFunc& f) {
  SymFunc fh = to_h(f);
  std::map<Partition, Rational> out;
  // group h-coefficients by weight and pair against the dual blocks
  std::map<unsigned, std::vector<std::pair<Partition, Rational>>> by_weight;
  for (const auto& [p, c] : fh.terms) by_weight[p.weight()].push_back({p, c});
  for (const auto& [w, part_list] : by_weight) {
    const WeightBlock& wb = weight_block(w);
    const DualBlock& db = dual_block(w);
    // coefficient on g_nu is <f, hstar_product(nu)>; with f = sum f_k h_k
    // and hstar_product(nu) = sum_k B[k][nu] m_k this is (f^T B)[nu]
    for (std::size_t nu = 0; nu < wb.parts.size(); ++nu) {
      Rational y = 0;
      for (const auto& [kappa, c] : part_list) y += c * db.pairing[wb.index.at(kappa)][nu];
      if (y != 0) out.emplace(wb.parts[nu], y);
    }
  }
  return out;
}

MacdonaldReport macdonald_check(const Partition& lam, const Partition& mu, unsigned bound) {
  unsigned w = lam.weight() + mu.weight();
  if (w > bound)
    throw Error(Error::Kind::Input, "combined weight " + std::to_string(w) +
                                        " exceeds configured bound " + std::to_string(bound));
  MacdonaldReport report;
  report.lam = lam;
  report.mu = mu;

  unsigned cap = std::max(w, 1u);
  SymFunc product = multiply(g_basis(lam, cap), g_basis(mu, cap));
  report.g_side = expand_in_g(product);

  report.integral = true;
  SymFunc rebuilt = SymFunc::zero(cap, SymFunc::Basis::H);
  for (const auto& [nu, c] : report.g_side) {
    if (!is_integer(c)) report.integral = false;
    rebuilt = add(rebuilt, scale(g_basis(nu, cap), c));
  }
  report.reconstructs = same_function(rebuilt, product);

  report.class_side = graded_fh_product(lam, mu);
  std::map<Partition, Rational> class_as_rational;
  for (const auto& [nu, a] : report.class_side)
    class_as_rational.emplace(nu, Rational(static_cast<unsigned long>(a)));
  report.matches = report.g_side == class_as_rational;
  return report;
}

}  // namespace hhweyl
