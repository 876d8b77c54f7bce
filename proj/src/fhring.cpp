#include "hhweyl/fhring.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hhweyl/errors.hpp"

namespace hhweyl {

Partition::Partition(std::vector<unsigned> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

unsigned Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  out += ')';
  return out;
}

Partition parse_partition(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  text = text.substr(a, b - a);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')')
      throw SyntaxError("unbalanced parenthesis in partition", text.size());
    text = text.substr(1, text.size() - 2);
  }
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError("expected digit in partition", pos);
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (v > 1000000) throw SyntaxError("partition part too large", pos);
      ++pos;
    }
    parts.push_back(static_cast<unsigned>(v));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw SyntaxError("expected ',' in partition", pos);
      ++pos;
      if (pos >= text.size()) throw SyntaxError("trailing ',' in partition", pos);
    }
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(unsigned w, unsigned max_part, std::vector<unsigned>& stack,
                    std::vector<Partition>& out) {
  if (w == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (unsigned p = std::min(w, max_part); p >= 1; --p) {
    stack.push_back(p);
    partitions_rec(w - p, p, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned w) {
  std::vector<Partition> out;
  std::vector<unsigned> stack;
  partitions_rec(w, w == 0 ? 1 : w, stack, out);
  return out;
}

Permutation Permutation::identity(unsigned n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0u);
  return p;
}

Permutation Permutation::compose(const Permutation& t) const {
  if (images.size() != t.images.size())
    throw DimensionMismatch("composing permutations of different sizes");
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) out.images[x] = images[t.images[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) out.images[images[x]] = static_cast<std::uint32_t>(x);
  return out;
}

namespace {

Partition cycle_type_of_images(const std::vector<std::uint32_t>& images) {
  std::vector<bool> seen(images.size(), false);
  std::vector<unsigned> lengths;
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (seen[s]) continue;
    unsigned len = 0;
    std::size_t x = s;
    do {
      seen[x] = true;
      ++len;
      x = images[x];
    } while (x != s);
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

}  // namespace

Partition cycle_type(const Permutation& p) { return cycle_type_of_images(p.images); }

Partition stable_type(const Permutation& p) {
  Partition ct = cycle_type(p);
  for (unsigned& part : ct.parts) --part;
  while (!ct.parts.empty() && ct.parts.back() == 0) ct.parts.pop_back();
  return ct;
}

bool stable_type_fits(const Partition& stable, unsigned n) {
  return stable.weight() + stable.length() <= n;
}

Partition cycle_type_from_stable(const Partition& stable, unsigned n) {
  if (!stable_type_fits(stable, n))
    throw Error(Error::Kind::Input,
                "stable type " + stable.str() + " needs at least " +
                    std::to_string(stable.weight() + stable.length()) + " points, got " +
                    std::to_string(n));
  std::vector<unsigned> parts;
  unsigned used = 0;
  for (unsigned part : stable.parts) {
    parts.push_back(part + 1);
    used += part + 1;
  }
  for (unsigned i = used; i < n; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

BigInt symmetric_class_size(const Partition& ct, unsigned n) {
  if (ct.weight() != n)
    throw Error(Error::Kind::Input, "cycle type weight " + std::to_string(ct.weight()) +
                                        " does not match n=" + std::to_string(n));
  BigInt size = 1;
  for (unsigned i = 2; i <= n; ++i) size *= i;  // n!
  // divide by prod l^{m_l} * m_l!
  std::map<unsigned, unsigned> mult;
  for (unsigned part : ct.parts) ++mult[part];
  for (auto [len, m] : mult) {
    for (unsigned i = 0; i < m; ++i) size /= len;
    for (unsigned i = 2; i <= m; ++i) size /= i;
  }
  return size;
}

Permutation canonical_of_cycle_type(const Partition& ct, unsigned n) {
  if (ct.weight() != n)
    throw Error(Error::Kind::Input, "cycle type weight does not match n");
  Permutation p = Permutation::identity(n);
  unsigned base = 0;
  for (unsigned len : ct.parts) {
    for (unsigned i = 0; i + 1 < len; ++i) p.images[base + i] = base + i + 1;
    p.images[base + len - 1] = base;
    base += len;
  }
  return p;
}

namespace {

// Walks every permutation of {0..n-1} with the given cycle lengths. Each
// cycle is anchored at its smallest point, so nothing is produced twice:
// the next cycle always starts at the smallest point not yet placed.
struct ClassWalker {
  unsigned n;
  std::vector<std::pair<unsigned, unsigned>> budget;  // (length, remaining count)
  std::vector<std::uint32_t> images;
  std::vector<bool> used;
  const std::function<void(const Permutation&)>* visit;

  void run() {
    images.assign(n, 0);
    used.assign(n, false);
    next_cycle();
  }

  void next_cycle() {
    unsigned anchor = n;
    for (unsigned i = 0; i < n; ++i)
      if (!used[i]) {
        anchor = i;
        break;
      }
    if (anchor == n) {
      Permutation p;
      p.images = images;
      (*visit)(p);
      return;
    }
    for (auto& [len, count] : budget) {
      if (count == 0) continue;
      --count;
      used[anchor] = true;
      extend_cycle(anchor, anchor, len - 1);
      used[anchor] = false;
      ++count;
    }
  }

  void extend_cycle(unsigned anchor, unsigned prev, unsigned remaining) {
    if (remaining == 0) {
      images[prev] = anchor;
      next_cycle();
      return;
    }
    for (unsigned b = anchor + 1; b < n; ++b) {
      if (used[b]) continue;
      used[b] = true;
      images[prev] = b;
      extend_cycle(anchor, b, remaining - 1);
      used[b] = false;
    }
  }
};

}  // namespace

void for_each_class_member(const Partition& ct, unsigned n,
                           const std::function<void(const Permutation&)>& visit) {
  if (ct.weight() != n)
    throw Error(Error::Kind::Input, "cycle type weight does not match n");
  ClassWalker walker;
  walker.n = n;
  std::map<unsigned, unsigned> mult;
  for (unsigned part : ct.parts) ++mult[part];
  for (auto it = mult.rbegin(); it != mult.rend(); ++it)
    walker.budget.emplace_back(it->first, it->second);
  walker.visit = &visit;
  walker.run();
}

std::vector<Permutation> class_members(const Partition& stable, unsigned n) {
  std::vector<Permutation> out;
  for_each_class_member(cycle_type_from_stable(stable, n), n,
                        [&](const Permutation& p) { out.push_back(p); });
  return out;
}

namespace {

// Coefficient of the class of nu_ct in the product of the class sums of
// lam_ct and mu_ct: pairs (x, y), x in the first class, y in the second,
// with x*y equal to a fixed member of the target class. Iterates the
// smaller class; both branches only ever compose, never invert, because a
// symmetric-group class is closed under inversion.
std::uint64_t count_for_target(const Partition& lam_ct, const Partition& mu_ct,
                               const Partition& nu_ct, unsigned n) {
  if (lam_ct.weight() != n || mu_ct.weight() != n || nu_ct.weight() != n)
    throw Error(Error::Kind::Input, "cycle type weight does not match n");
  Permutation z = canonical_of_cycle_type(nu_ct, n);
  std::uint64_t count = 0;
  if (symmetric_class_size(lam_ct, n) <= symmetric_class_size(mu_ct, n)) {
    // v ranges over the inverses of x: need v*z in the second class
    for_each_class_member(lam_ct, n, [&](const Permutation& v) {
      if (cycle_type(v.compose(z)) == mu_ct) ++count;
    });
  } else {
    // u ranges over the inverses of y: need z*u in the first class
    for_each_class_member(mu_ct, n, [&](const Permutation& u) {
      if (cycle_type(z.compose(u)) == lam_ct) ++count;
    });
  }
  return count;
}

}  // namespace

FHConstants fh_constants(const Partition& lam, const Partition& mu, unsigned n,
                         unsigned bound) {
  if (n > bound)
    throw BoundExceeded("n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  if (n == 0) throw Error(Error::Kind::Input, "n must be positive");
  Partition lam_ct = cycle_type_from_stable(lam, n);
  Partition mu_ct = cycle_type_from_stable(mu, n);
  FHConstants out;
  out.lam = lam;
  out.mu = mu;
  out.n = n;
  unsigned top = lam.weight() + mu.weight();
  for (const Partition& rho : partitions_of(n)) {
    Permutation rep = canonical_of_cycle_type(rho, n);
    Partition nu = stable_type(rep);
    std::uint64_t c = count_for_target(lam_ct, mu_ct, rho, n);
    if (c == 0) continue;
    if (nu.weight() > top)
      throw CrosscheckFailure("nonzero coefficient on " + nu.str() +
                              " above combined weight " + std::to_string(top));
    out.terms.emplace(std::move(nu), c);
  }
  return out;
}

std::map<Partition, std::uint64_t> top_constants(const Partition& lam, const Partition& mu) {
  unsigned w = lam.weight() + mu.weight();
  unsigned base = 2 * w == 0 ? 1 : 2 * w;
  std::map<Partition, std::uint64_t> agreed;
  for (unsigned probe = 0; probe < 3; ++probe) {
    unsigned n = base + probe;
    Partition lam_ct = cycle_type_from_stable(lam, n);
    Partition mu_ct = cycle_type_from_stable(mu, n);
    std::map<Partition, std::uint64_t> found;
    for (const Partition& nu : partitions_of(w)) {
      if (!stable_type_fits(nu, n)) continue;
      std::uint64_t c = count_for_target(lam_ct, mu_ct, cycle_type_from_stable(nu, n), n);
      if (c != 0) found.emplace(nu, c);
    }
    if (probe == 0) {
      agreed = std::move(found);
    } else if (found != agreed) {
      throw StabilityFailure("top coefficients of " + lam.str() + "*" + mu.str() +
                             " changed between n=" + std::to_string(base) + " and n=" +
                             std::to_string(n));
    }
  }
  return agreed;
}

const std::map<Partition, std::uint64_t>& graded_fh_product(const Partition& lam,
                                                            const Partition& mu) {
  static std::map<std::pair<Partition, Partition>, std::map<Partition, std::uint64_t>> cache;
  static std::mutex lock;
  std::pair<Partition, Partition> key =
      lam <= mu ? std::make_pair(lam, mu) : std::make_pair(mu, lam);
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::map<Partition, std::uint64_t> value = top_constants(key.first, key.second);
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

BigInt binomial(const BigInt& t, unsigned k) {
  BigInt num = 1;
  for (unsigned i = 0; i < k; ++i) num *= t - static_cast<long>(i);
  for (unsigned i = 2; i <= k; ++i) num /= i;
  return num;
}

BigInt IntegerValuedPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    acc += coeffs[k] * binomial(t, static_cast<unsigned>(k));
  return acc;
}

std::string IntegerValuedPolynomial::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!first) out << " + ";
    out << coeffs[k].get_str() << "*C(n," << k << ")";
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

IntegerValuedPolynomial interpolate_constant(const Partition& lam, const Partition& mu,
                                             const Partition& nu, unsigned n_lo,
                                             unsigned n_hi) {
  if (n_hi < n_lo + 3)
    throw Error(Error::Kind::Input, "need at least four sample points (two fitted, two held out)");
  unsigned need = std::max({nu.weight() + static_cast<unsigned>(nu.length()),
                            lam.weight() + static_cast<unsigned>(lam.length()),
                            mu.weight() + static_cast<unsigned>(mu.length()), 1u});
  if (n_lo < need)
    throw Error(Error::Kind::Input,
                "classes do not all exist in S_" + std::to_string(n_lo) + "; start at " +
                    std::to_string(need));
  std::vector<BigInt> samples;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    std::uint64_t c = count_for_target(cycle_type_from_stable(lam, n),
                                       cycle_type_from_stable(mu, n),
                                       cycle_type_from_stable(nu, n), n);
    samples.push_back(BigInt(static_cast<unsigned long>(c)));
  }
  std::size_t fit_count = samples.size() - 2;

  // forward differences at n_lo over the fitted prefix
  std::vector<BigInt> diffs(samples.begin(), samples.begin() + static_cast<long>(fit_count));
  std::vector<BigInt> newton;
  for (std::size_t k = 0; k < fit_count; ++k) {
    newton.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  while (!newton.empty() && newton.back() == 0) newton.pop_back();

  // candidate in the shifted basis C(t - n_lo, k); check the held-out tail
  auto eval_newton = [&](const BigInt& t) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < newton.size(); ++k)
      acc += newton[k] * binomial(t - static_cast<long>(n_lo), static_cast<unsigned>(k));
    return acc;
  };
  for (std::size_t h = fit_count; h < samples.size(); ++h) {
    BigInt t = static_cast<long>(n_lo + h);
    if (eval_newton(t) != samples[h])
      throw NonPolynomialFit("held-out value at n=" + std::to_string(n_lo + h) +
                             " does not match the degree-" +
                             std::to_string(newton.empty() ? 0 : newton.size() - 1) +
                             " fit; widen the sample range");
  }

  // rebase to C(t, k): C(t - a, k) = sum_j C(t, j) * C(-a, k - j),
  // and C(-a, i) = (-1)^i C(a + i - 1, i)
  IntegerValuedPolynomial out;
  out.coeffs.assign(newton.size(), BigInt(0));
  for (std::size_t j = 0; j < newton.size(); ++j) {
    for (std::size_t k = j; k < newton.size(); ++k) {
      unsigned i = static_cast<unsigned>(k - j);
      BigInt c = binomial(BigInt(static_cast<long>(n_lo + i) - 1), i);
      if (i % 2 == 1) c = -c;
      out.coeffs[j] += newton[k] * c;
    }
  }
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

}  // namespace hhweyl
