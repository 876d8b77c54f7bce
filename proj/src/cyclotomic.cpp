#include "hhweyl/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <utility>

#include "hhweyl/errors.hpp"

namespace hhweyl {

namespace {

std::vector<unsigned> distinct_primes(unsigned m) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= m; ++p) {
    if (m % p == 0) {
      ps.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

// Exact division of integer polynomials (ascending coefficients, monic divisor).
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<BigInt> q(num.size() - dn, BigInt(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    if (num[i] != 0) {
      BigInt c = num[i];
      q[i - dn] = c;
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
  }
  for (const auto& r : num)
    if (r != 0) throw Error(Error::Kind::Check, "cyclotomic polynomial division left a remainder");
  return q;
}

void reduce_mod_cyclotomic(std::vector<Rational>& p, unsigned m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] != 0) {
      Rational c = p[i];
      for (std::size_t j = 0; j < deg; ++j)
        if (phi[j] != 0) p[i - deg + j] -= c * Rational(phi[j]);
      p[i] = 0;
    }
  }
  p.resize(deg);
}

// Solve A y = b exactly; A has full column rank and the system is consistent,
// anything else reports through `what`. First structurally nonzero pivot.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                                  const char* what) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::size_t> pivot_row(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) throw Error(Error::Kind::Check, std::string("singular linear system: ") + what);
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    Rational inv = Rational(1) / A[r][c];
    for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && A[i][c] != 0) {
        Rational f = A[i][c];
        for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        b[i] -= f * b[r];
      }
    }
    pivot_row[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) throw Error(Error::Kind::Check, std::string("inconsistent linear system: ") + what);
  std::vector<Rational> y(cols);
  for (std::size_t c = 0; c < cols; ++c) y[c] = b[pivot_row[c]];
  return y;
}

// Image under the automorphism zeta_m -> zeta_m^k, gcd(k, m) = 1.
Cyclotomic galois_image(const Cyclotomic& x, unsigned k) {
  unsigned m = x.conductor();
  std::vector<Rational> poly(m, Rational(0));
  const auto& co = x.coeffs();
  for (std::size_t j = 0; j < co.size(); ++j)
    if (co[j] != 0) poly[static_cast<std::size_t>(j * static_cast<unsigned long long>(k) % m)] += co[j];
  return Cyclotomic::from_poly(m, std::move(poly));
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p : distinct_primes(m)) result = result / p * (p - 1);
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw Error(Error::Kind::Input, "conductor must be positive");
  static std::map<unsigned, std::vector<BigInt>> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<BigInt> result;
  if (m == 1) {
    result = {BigInt(-1), BigInt(1)};
  } else {
    std::vector<BigInt> num(m + 1, BigInt(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d)
      if (m % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    result = std::move(num);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(m, std::move(result)).first->second;
}

namespace {
// mpq_class arithmetic keeps values reduced, but the (num, den) constructor
// does not; everything entering a Cyclotomic goes through here.
void canonicalize_in_place(Rational& q) {
  if (q.get_den() == 1) return;
  if (q.get_den() == 0) throw Error(Error::Kind::Input, "zero denominator");
  q.canonicalize();
}
}  // namespace

Cyclotomic::Cyclotomic(Rational v) : conductor_(1), coeffs_{std::move(v)} {
  canonicalize_in_place(coeffs_[0]);
}

const Rational& Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(Error::Kind::Input, "value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::from_poly(unsigned m, std::vector<Rational> poly) {
  if (m == 0) throw Error(Error::Kind::Input, "conductor must be positive");
  for (Rational& c : poly) canonicalize_in_place(c);
  reduce_mod_cyclotomic(poly, m);
  bool rational_only = true;
  for (std::size_t j = 1; j < poly.size(); ++j) {
    if (poly[j] != 0) {
      rational_only = false;
      break;
    }
  }
  if (m != 1 && rational_only) return Cyclotomic(poly.empty() ? Rational(0) : std::move(poly[0]));
  return Cyclotomic(m, std::move(poly));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned m, long k) {
  if (m == 0) throw Error(Error::Kind::Input, "root order must be positive");
  long jm = k % static_cast<long>(m);
  if (jm < 0) jm += m;
  unsigned j = static_cast<unsigned>(jm);
  if (j == 0) return Cyclotomic(1L);
  unsigned g = std::gcd(j, m);
  unsigned mm = m / g, jj = j / g;
  std::vector<Rational> poly(jj + 1, Rational(0));
  poly[jj] = 1;
  return from_poly(mm, std::move(poly));
}

std::vector<Rational> Cyclotomic::coords_at(unsigned m) const {
  if (m == 0 || m % conductor_ != 0)
    throw ConductorMismatch("cannot embed conductor " + std::to_string(conductor_) +
                            " into conductor " + std::to_string(m));
  if (m == conductor_) return coeffs_;
  const unsigned stride = m / conductor_;
  std::vector<Rational> poly((coeffs_.size() - 1) * static_cast<std::size_t>(stride) + 1,
                             Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * stride] = coeffs_[j];
  reduce_mod_cyclotomic(poly, m);
  return poly;
}

Cyclotomic Cyclotomic::embedded(unsigned m) const { return from_poly(m, coords_at(m)); }

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ == 1) return *this;
  return galois_image(*this, conductor_ - 1);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(Error::Kind::Input, "division by zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  const std::size_t n = coeffs_.size();
  // Column j holds the coordinates of value * zeta^j; solving against e_0
  // finds the coordinates of the inverse.
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> shifted(n + j, Rational(0));
    for (std::size_t i = 0; i < n; ++i) shifted[i + j] = coeffs_[i];
    reduce_mod_cyclotomic(shifted, conductor_);
    for (std::size_t i = 0; i < n; ++i) A[i][j] = std::move(shifted[i]);
  }
  std::vector<Rational> e0(n, Rational(0));
  e0[0] = 1;
  return from_poly(conductor_, solve_exact(std::move(A), std::move(e0), "field inverse"));
}

namespace {
Cyclotomic pow_positive(Cyclotomic base, unsigned long e) {
  Cyclotomic acc(1L);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}
}  // namespace

Cyclotomic Cyclotomic::pow(long k) const {
  if (k == 0) return Cyclotomic(1L);
  if (k > 0) return pow_positive(*this, static_cast<unsigned long>(k));
  unsigned long e = static_cast<unsigned long>(-(k + 1)) + 1;
  return pow_positive(inverse(), e);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  const unsigned M = std::lcm(conductor_, o.conductor_);
  std::vector<Rational> a = coords_at(M);
  const std::vector<Rational> b = o.coords_at(M);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  *this = from_poly(M, std::move(a));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] -= o.coeffs_[0];
    return *this;
  }
  const unsigned M = std::lcm(conductor_, o.conductor_);
  std::vector<Rational> a = coords_at(M);
  const std::vector<Rational> b = o.coords_at(M);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
  *this = from_poly(M, std::move(a));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Cyclotomic();
    return *this;
  }
  const unsigned M = std::lcm(conductor_, o.conductor_);
  const std::vector<Rational> a = coords_at(M);
  const std::vector<Rational> b = o.coords_at(M);
  std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  *this = from_poly(M, std::move(prod));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.conductor_ == 1 || b.conductor_ == 1) return false;
  const unsigned M = std::lcm(a.conductor_, b.conductor_);
  return a.coords_at(M) == b.coords_at(M);
}

Cyclotomic Cyclotomic::minimal() const {
  Cyclotomic x = *this;
  bool descended = true;
  while (descended && x.conductor_ > 1) {
    descended = false;
    const unsigned m = x.conductor_;
    for (unsigned p : distinct_primes(m)) {
      const unsigned d = m / p;
      bool fixed = true;
      for (unsigned k = d + 1; k < m && fixed; k += d) {
        if (std::gcd(k, m) != 1) continue;
        if (galois_image(x, k) != x) fixed = false;
      }
      if (!fixed) continue;
      // Fixed by Gal(Q(zeta_m)/Q(zeta_d)), so the value lives at conductor d:
      // solve for its coordinates over the smaller power basis.
      const unsigned pd = euler_phi(d);
      const unsigned pm = euler_phi(m);
      std::vector<std::vector<Rational>> A(pm, std::vector<Rational>(pd, Rational(0)));
      for (unsigned i = 0; i < pd; ++i) {
        std::vector<Rational> col(static_cast<std::size_t>(i) * (m / d) + 1, Rational(0));
        col[static_cast<std::size_t>(i) * (m / d)] = 1;
        reduce_mod_cyclotomic(col, m);
        for (unsigned r = 0; r < pm; ++r) A[r][i] = std::move(col[r]);
      }
      x = from_poly(d, solve_exact(std::move(A), x.coeffs_, "conductor descent"));
      descended = true;
      break;
    }
  }
  return x;
}

std::string Cyclotomic::str() const {
  const Cyclotomic x = minimal();
  if (x.conductor_ == 1) return x.coeffs_[0].get_str();
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < x.coeffs_.size(); ++j) {
    const Rational& c = x.coeffs_[j];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? '-' : '+';
    }
    const Rational mag = neg ? Rational(-c) : c;
    if (j == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    out += "E(";
    out += std::to_string(x.conductor_);
    out += ')';
    if (j != 1) {
      out += '^';
      out += std::to_string(j);
    }
  }
  return out;
}

void Cyclotomic::append_key(std::string& out, unsigned ambient) const {
  if (conductor_ == 1) {
    out += 'r';
    out += coeffs_[0].get_str();
    return;
  }
  out += 'c';
  for (const Rational& c : coords_at(ambient)) {
    out += c.get_str();
    out += ',';
  }
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool consume(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos); }

  BigInt parse_uint() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return BigInt(std::string(s.substr(start, pos - start)), 10);
  }

  Cyclotomic parse_expr() {
    skip_ws();
    const bool neg = consume('-');
    if (!neg) consume('+');
    Cyclotomic v = parse_term();
    if (neg) v = -v;
    for (;;) {
      if (consume('+'))
        v += parse_term();
      else if (consume('-'))
        v -= parse_term();
      else
        return v;
    }
  }

  Cyclotomic parse_term() {
    Cyclotomic v = parse_factor();
    for (;;) {
      if (consume('*')) {
        v *= parse_factor();
      } else if (peek_is('/')) {
        const std::size_t at = pos;
        ++pos;
        const Cyclotomic d = parse_factor();
        if (d.is_zero()) throw SyntaxError("division by zero", at);
        if (!d.is_rational()) throw SyntaxError("division requires a rational divisor", at);
        v *= Cyclotomic(Rational(1) / d.rational_value());
      } else {
        return v;
      }
    }
  }

  Cyclotomic parse_factor() {
    Cyclotomic base = parse_atom();
    if (consume('^')) {
      skip_ws();
      const bool neg = consume('-');
      const BigInt e = parse_uint();
      if (!e.fits_slong_p()) fail("exponent too large");
      const long k = e.get_si();
      base = base.pow(neg ? -k : k);
    }
    return base;
  }

  Cyclotomic parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    const char c = s[pos];
    if (c == '(') {
      ++pos;
      Cyclotomic v = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return v;
    }
    if (c == 'E') {
      ++pos;
      if (!consume('(')) fail("expected '(' after E");
      const BigInt m = parse_uint();
      if (!consume(')')) fail("expected ')'");
      if (m == 0) fail("root order must be positive");
      if (m > 1000000) fail("root order too large");
      return Cyclotomic::root_of_unity(static_cast<unsigned>(m.get_ui()));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Cyclotomic(Rational(parse_uint()));
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text) {
  Parser p{text};
  Cyclotomic v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v.minimal();
}

}  // namespace hhweyl
