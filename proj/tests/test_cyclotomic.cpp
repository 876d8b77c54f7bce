#include "doctest.h"

#include <numeric>
#include <random>
#include <vector>

#include "hhweyl/cyclotomic.hpp"
#include "hhweyl/errors.hpp"

using namespace hhweyl;

namespace {

// Independent route to the cyclotomic polynomials for cross-checking:
// Phi_m = prod over d | m of (x^(m/d) - 1)^mobius(d).
int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<BigInt> poly_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<BigInt> q(num.size() - dn, BigInt(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    BigInt c = num[i] / den[dn];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (const auto& r : num) REQUIRE(r == 0);
  return q;
}

std::vector<BigInt> binomial_x_pow_minus_one(unsigned k) {
  std::vector<BigInt> p(k + 1, BigInt(0));
  p[0] = -1;
  p[k] = 1;
  return p;
}

std::vector<BigInt> phi_by_mobius(unsigned m) {
  std::vector<BigInt> num{BigInt(1)};
  std::vector<BigInt> den{BigInt(1)};
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 1) num = poly_mul(num, binomial_x_pow_minus_one(m / d));
    if (mu == -1) den = poly_mul(den, binomial_x_pow_minus_one(m / d));
  }
  return poly_div(std::move(num), den);
}

Cyclotomic horner(const std::vector<BigInt>& poly, const Cyclotomic& x) {
  Cyclotomic acc;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + Cyclotomic(Rational(poly[i]));
  return acc;
}

Cyclotomic sample_value(std::mt19937& rng) {
  static const unsigned conductors[] = {1, 3, 4, 5, 8, 12};
  const unsigned m = conductors[rng() % 6];
  std::vector<Rational> poly(euler_phi(m));
  for (auto& c : poly) {
    const long num = static_cast<long>(rng() % 7) - 3;
    const long den = 1 + static_cast<long>(rng() % 2);
    c = Rational(num, den);
  }
  return Cyclotomic::from_poly(m, std::move(poly));
}

}  // namespace

TEST_CASE("euler phi and divisor sum") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(105) == 48);
  for (unsigned m = 1; m <= 60; ++m) {
    unsigned total = 0;
    for (unsigned d = 1; d <= m; ++d)
      if (m % d == 0) total += euler_phi(d);
    CHECK(total == m);
  }
}

TEST_CASE("cyclotomic polynomials match frozen small cases") {
  auto as_longs = [](const std::vector<BigInt>& v) {
    std::vector<long> out;
    for (const auto& c : v) out.push_back(c.get_si());
    return out;
  };
  CHECK(as_longs(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
  CHECK(as_longs(cyclotomic_polynomial(2)) == std::vector<long>{1, 1});
  CHECK(as_longs(cyclotomic_polynomial(3)) == std::vector<long>{1, 1, 1});
  CHECK(as_longs(cyclotomic_polynomial(4)) == std::vector<long>{1, 0, 1});
  CHECK(as_longs(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
  CHECK(as_longs(cyclotomic_polynomial(8)) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(as_longs(cyclotomic_polynomial(9)) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(as_longs(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic polynomials agree with the Moebius product route") {
  for (unsigned m = 1; m <= 60; ++m) {
    const auto& lib = cyclotomic_polynomial(m);
    CHECK(lib.size() == euler_phi(m) + 1);
    CHECK(lib == phi_by_mobius(m));
  }
}

TEST_CASE("the first coefficient of magnitude two appears at order 105") {
  const auto& p = cyclotomic_polynomial(105);
  CHECK(p[7] == -2);
  for (unsigned m = 1; m < 105; ++m)
    for (const auto& c : cyclotomic_polynomial(m)) CHECK((c == 1 || c == -1 || c == 0));
}

TEST_CASE("primitive roots satisfy their minimal polynomial") {
  for (unsigned m = 1; m <= 60; ++m)
    CHECK(horner(cyclotomic_polynomial(m), Cyclotomic::root_of_unity(m)).is_zero());
}

TEST_CASE("root_of_unity canonicalizes the conductor") {
  CHECK(Cyclotomic::root_of_unity(1) == Cyclotomic(1));
  CHECK(Cyclotomic::root_of_unity(2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(2).conductor() == 1);
  CHECK(Cyclotomic::root_of_unity(12, 4) == Cyclotomic::root_of_unity(3));
  CHECK(Cyclotomic::root_of_unity(12, 4).conductor() == 3);
  CHECK(Cyclotomic::root_of_unity(12, 6).conductor() == 1);
  CHECK(Cyclotomic::root_of_unity(5, -1) == Cyclotomic::root_of_unity(5, 4));
  CHECK(Cyclotomic::root_of_unity(5, 7) == Cyclotomic::root_of_unity(5, 2));
}

TEST_CASE("rational results collapse to conductor one") {
  const Cyclotomic i = Cyclotomic::root_of_unity(4);
  CHECK((i * i) == Cyclotomic(-1));
  CHECK((i * i).conductor() == 1);
  CHECK((i * i).is_rational());
  const Cyclotomic z3 = Cyclotomic::root_of_unity(3);
  CHECK(z3 + z3.pow(2) == Cyclotomic(-1));
  const Cyclotomic z5 = Cyclotomic::root_of_unity(5);
  CHECK((z5 + z5.pow(2) + z5.pow(3) + z5.pow(4)).rational_value() == -1);
}

TEST_CASE("square root of two lives at conductor eight") {
  const Cyclotomic r = Cyclotomic::root_of_unity(8) + Cyclotomic::root_of_unity(8, 7);
  CHECK(r * r == Cyclotomic(2));
  CHECK(r.minimal().conductor() == 8);
  CHECK(!r.is_rational());
}

TEST_CASE("inverse, conjugate and powers of roots") {
  const Cyclotomic z5 = Cyclotomic::root_of_unity(5);
  CHECK(z5.inverse() == z5.pow(4));
  CHECK(z5.conjugate() == z5.pow(4));
  CHECK(z5 * z5.conjugate() == Cyclotomic(1));
  CHECK(z5.pow(-3) == z5.pow(2));
  const Cyclotomic x = Cyclotomic(Rational(2, 3)) + Cyclotomic::root_of_unity(8, 3);
  CHECK(x * x.inverse() == Cyclotomic(1));
  CHECK_THROWS_AS(Cyclotomic().inverse(), Error);
}

TEST_CASE("embedding and conductor mismatch") {
  const Cyclotomic z3 = Cyclotomic::root_of_unity(3);
  const Cyclotomic z12 = z3.embedded(12);
  CHECK(z12.conductor() == 12);
  CHECK(z12 == z3);
  CHECK(z12.minimal().conductor() == 3);
  CHECK(Cyclotomic(Rational(1, 2)).embedded(8).conductor() == 1);
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(4).embedded(6), ConductorMismatch);
}

TEST_CASE("minimization is idempotent and finds proper subfields") {
  // zeta_12^3 = i arrives at conductor 12 when built as a raw polynomial.
  std::vector<Rational> poly(4);
  poly[3] = 1;
  const Cyclotomic x = Cyclotomic::from_poly(12, std::move(poly));
  CHECK(x.conductor() == 12);
  const Cyclotomic xm = x.minimal();
  CHECK(xm.conductor() == 4);
  CHECK(xm == Cyclotomic::root_of_unity(4));
  CHECK(xm.minimal().conductor() == 4);
  // conductor 2k with k odd always descends
  const Cyclotomic z6 = Cyclotomic::root_of_unity(6).embedded(6);
  CHECK(Cyclotomic::root_of_unity(6).minimal().conductor() == 3);
  CHECK(z6.minimal() == -Cyclotomic::root_of_unity(3, 2));
}

TEST_CASE("field axioms on seeded samples") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    const Cyclotomic a = sample_value(rng);
    const Cyclotomic b = sample_value(rng);
    const Cyclotomic c = sample_value(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclotomic());
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
  }
}

TEST_CASE("parser handles literals, powers, fractions and parentheses") {
  CHECK(parse_cyclotomic("2") == Cyclotomic(2));
  CHECK(parse_cyclotomic("-7/2") == Cyclotomic(Rational(-7, 2)));
  CHECK(parse_cyclotomic("E(4)") == Cyclotomic::root_of_unity(4));
  CHECK(parse_cyclotomic("E(4)^2") == Cyclotomic(-1));
  CHECK(parse_cyclotomic("E(6)^-1") == Cyclotomic::root_of_unity(6, 5));
  CHECK(parse_cyclotomic("2^-1") == Cyclotomic(Rational(1, 2)));
  CHECK(parse_cyclotomic("(1+E(4))*(1-E(4))") == Cyclotomic(2));
  CHECK(parse_cyclotomic("1/2 - 2*E(8) + E(8)^3") ==
        Cyclotomic(Rational(1, 2)) - Cyclotomic(2) * Cyclotomic::root_of_unity(8) +
            Cyclotomic::root_of_unity(8, 3));
  CHECK(parse_cyclotomic("E(5)+E(5)^4-E(5)-E(5)^4").is_zero());
  CHECK(parse_cyclotomic(" 3 * E(3) ^ 2 ") == Cyclotomic(3) * Cyclotomic::root_of_unity(3, 2));
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_cyclotomic(""), SyntaxError);
  CHECK_THROWS_AS(parse_cyclotomic("1+"), SyntaxError);
  CHECK_THROWS_AS(parse_cyclotomic("E(0)"), SyntaxError);
  CHECK_THROWS_AS(parse_cyclotomic("E(4"), SyntaxError);
  CHECK_THROWS_AS(parse_cyclotomic("2/0"), SyntaxError);
  CHECK_THROWS_AS(parse_cyclotomic("1/E(4)"), SyntaxError);
  CHECK_THROWS_AS(parse_cyclotomic("1)"), SyntaxError);
  CHECK_THROWS_AS(parse_cyclotomic("x"), SyntaxError);
  CHECK_THROWS_AS(parse_cyclotomic("1..2"), SyntaxError);
}

TEST_CASE("printing round-trips bit-exactly") {
  const char* inputs[] = {
      "0",
      "-3",
      "5/6",
      "E(4)",
      "E(8)+E(8)^7",
      "1/2-2*E(8)+E(8)^3",
      "E(7)+3*E(7)^2-1/3*E(7)^5",
      "E(12)^4+E(12)^8",
      "2*E(5)^2+2*E(5)^3",
  };
  for (const char* text : inputs) {
    const Cyclotomic x = parse_cyclotomic(text);
    const std::string printed = x.str();
    const Cyclotomic back = parse_cyclotomic(printed);
    CHECK(back == x);
    CHECK(back.str() == printed);
  }
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const Cyclotomic x = sample_value(rng);
    const std::string printed = x.str();
    CHECK(parse_cyclotomic(printed) == x);
    CHECK(parse_cyclotomic(printed).str() == printed);
  }
}

TEST_CASE("printed form uses minimal conductor") {
  CHECK(Cyclotomic::root_of_unity(3).embedded(12).str() == "E(3)");
  CHECK(parse_cyclotomic("E(12)^4").str() == "E(3)");
  CHECK(Cyclotomic(Rational(-1, 2)).str() == "-1/2");
  CHECK((Cyclotomic::root_of_unity(4) * Cyclotomic(-1)).str() == "-E(4)");
}

TEST_CASE("keys at an ambient conductor identify equal values") {
  const Cyclotomic a = Cyclotomic::root_of_unity(4);
  const Cyclotomic b = Cyclotomic::root_of_unity(12, 3);
  CHECK(b.conductor() == 4);
  std::string ka, kb;
  a.append_key(ka, 12);
  b.append_key(kb, 12);
  CHECK(ka == kb);
  std::string kr1, kr2;
  Cyclotomic(Rational(1, 2)).append_key(kr1, 12);
  (Cyclotomic(Rational(3, 2)) - Cyclotomic(1)).append_key(kr2, 12);
  CHECK(kr1 == kr2);
}
