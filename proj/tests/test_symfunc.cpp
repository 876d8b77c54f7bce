#include "hhweyl/symfunc.hpp"

#include <doctest.h>

#include <map>
#include <vector>

#include "hhweyl/errors.hpp"
#include "hhweyl/fhring.hpp"

using namespace hhweyl;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

SymFunc H(std::vector<unsigned> parts, unsigned cap = kDefaultWeightCap) {
  return SymFunc::h(P(std::move(parts)), cap);
}
SymFunc M(std::vector<unsigned> parts, unsigned cap = kDefaultWeightCap) {
  return SymFunc::m(P(std::move(parts)), cap);
}

std::map<Partition, Rational> T(std::vector<std::pair<std::vector<unsigned>, long>> entries) {
  std::map<Partition, Rational> out;
  for (auto& [parts, c] : entries) out.emplace(P(std::move(parts)), Rational(c));
  return out;
}

}  // namespace

TEST_CASE("complete functions expand into monomials with classical coefficients") {
  CHECK(h_to_m(P({1})).terms == T({{{1}, 1}}));
  CHECK(h_to_m(P({2})).terms == T({{{2}, 1}, {{1, 1}, 1}}));
  CHECK(h_to_m(P({1, 1})).terms == T({{{2}, 1}, {{1, 1}, 2}}));
  CHECK(h_to_m(P({3})).terms == T({{{3}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 1}}));
  CHECK(h_to_m(P({2, 1})).terms == T({{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 3}}));
  CHECK(h_to_m(P({})).terms == T({{{}, 1}}));
  CHECK_THROWS_AS(h_to_m(P({3, 2, 2, 1}), 6), Error);
}

TEST_CASE("monomials expand back in the complete basis") {
  SymFunc m2 = to_h(M({2}));
  CHECK(m2.terms == T({{{2}, 2}, {{1, 1}, -1}}));
  SymFunc m11 = to_h(M({1, 1}));
  CHECK(m11.terms == T({{{2}, -1}, {{1, 1}, 1}}));
}

TEST_CASE("basis conversions round trip on every block up to weight six") {
  for (unsigned w = 0; w <= 6; ++w) {
    for (const Partition& lam : partitions_of(w)) {
      SymFunc hl = SymFunc::h(lam);
      CHECK(same_function(to_h(to_m(hl)), hl));
      SymFunc ml = SymFunc::m(lam);
      SymFunc back = to_m(to_h(ml));
      CHECK(back.terms == ml.terms);
    }
  }
}

TEST_CASE("products in the free polynomial ring of complete functions") {
  CHECK(multiply(H({1}), H({1})).terms == T({{{1, 1}, 1}}));
  CHECK(multiply(H({2, 1}), H({3, 1})).terms == T({{{3, 2, 1, 1}, 1}}));
  SymFunc f = add(H({2}), scale(H({1}), Rational(-3)));
  CHECK(same_function(multiply(SymFunc::one(), f), f));

  SymFunc mm = to_m(multiply(M({1}), M({1})));
  CHECK(mm.terms == T({{{2}, 1}, {{1, 1}, 2}}));
}

TEST_CASE("products truncate silently above the weight cap") {
  SymFunc cut = multiply(H({2}, 2), H({1}, 2));
  CHECK(cut.is_zero());
  SymFunc sum = add(H({2}, 3), H({1}, 3));
  CHECK(multiply(sum, sum).terms == T({{{2, 1}, 2}, {{1, 1}, 1}}));
  CHECK_THROWS_AS(multiply(H({1}, 4), H({1}, 5)), Error);
  CHECK_THROWS_AS(SymFunc::h(P({3}), 2), Error);
}

TEST_CASE("pairing of complete against monomial functions") {
  CHECK(hall_pairing(H({2}), M({2})) == 1);
  CHECK(hall_pairing(H({2}), M({1, 1})) == 0);
  CHECK(hall_pairing(H({1, 1}), H({2})) == 1);
  CHECK(hall_pairing(H({1}), M({2})) == 0);  // cross weight

  for (unsigned w = 0; w <= 5; ++w)
    for (const Partition& lam : partitions_of(w))
      for (const Partition& mu : partitions_of(w))
        CHECK(hall_pairing(SymFunc::h(lam), SymFunc::m(mu)) ==
              (lam == mu ? Rational(1) : Rational(0)));
}

TEST_CASE("pairing is symmetric and bilinear") {
  for (unsigned a = 0; a <= 4; ++a)
    for (const Partition& lam : partitions_of(a))
      for (const Partition& mu : partitions_of(a))
        CHECK(hall_pairing(SymFunc::h(lam), SymFunc::h(mu)) ==
              hall_pairing(SymFunc::h(mu), SymFunc::h(lam)));

  SymFunc f = add(H({2}), scale(H({1, 1}), Rational(3)));
  SymFunc g = add(M({2}), scale(M({1, 1}), Rational(-2)));
  Rational direct = hall_pairing(f, g);
  Rational expanded = hall_pairing(H({2}), M({2})) -
                      2 * hall_pairing(H({2}), M({1, 1})) +
                      3 * hall_pairing(H({1, 1}), M({2})) -
                      6 * hall_pairing(H({1, 1}), M({1, 1}));
  CHECK(direct == expanded);
}

TEST_CASE("inverse series coefficients, low weights frozen") {
  CHECK(hstar(0).terms == T({{{}, 1}}));
  CHECK(hstar(1).terms == T({{{1}, -1}}));
  CHECK(hstar(2).terms == T({{{1, 1}, 2}, {{2}, -1}}));
  CHECK(hstar(3).terms == T({{{1, 1, 1}, -5}, {{2, 1}, 5}, {{3}, -1}}));
  CHECK_THROWS_AS(hstar(9, 8), Error);

  for (unsigned i = 0; i <= 8; ++i)
    for (const auto& [p, c] : hstar(i).terms) CHECK(p.weight() == i);
}

TEST_CASE("the two inverse series really compose to the identity") {
  // v(s) = sum_i h_i T(s)^{i+1} where T(s) = sum_i hstar(i) s^{i+1};
  // the result must be the series s itself through order 7.
  const unsigned order = 7;
  const unsigned cap = 8;
  auto series_mul = [&](const std::vector<SymFunc>& a, const std::vector<SymFunc>& b) {
    std::vector<SymFunc> c(order + 1, SymFunc::zero(cap));
    for (unsigned i = 0; i <= order; ++i)
      for (unsigned j = 0; i + j <= order; ++j)
        c[i + j] = add(c[i + j], multiply(a[i], b[j]));
    return c;
  };

  std::vector<SymFunc> tser(order + 1, SymFunc::zero(cap));
  for (unsigned i = 0; i + 1 <= order; ++i) tser[i + 1] = hstar(i, cap);

  std::vector<SymFunc> tpow(order + 1, SymFunc::zero(cap));
  tpow[0] = SymFunc::one(cap);  // T^0
  std::vector<SymFunc> v(order + 1, SymFunc::zero(cap));
  for (unsigned i = 0; i + 1 <= order; ++i) {
    tpow = series_mul(tpow, tser);  // now T^{i+1}
    for (unsigned j = 0; j <= order; ++j)
      v[j] = add(v[j], multiply(SymFunc::h(P({i}), cap), tpow[j]));
  }

  CHECK(same_function(v[1], SymFunc::one(cap)));
  for (unsigned j = 2; j <= order; ++j) CHECK(v[j].is_zero());
  CHECK(v[0].is_zero());
}

TEST_CASE("the substitution morphism is an involution") {
  CHECK(same_function(psi(SymFunc::one()), SymFunc::one()));
  CHECK(psi(H({1})).terms == T({{{1}, -1}}));
  CHECK(psi(H({2})).terms == T({{{1, 1}, 2}, {{2}, -1}}));

  for (unsigned w = 0; w <= 8; ++w)
    for (const Partition& lam : partitions_of(w)) {
      SymFunc hl = SymFunc::h(lam);
      CHECK(same_function(psi(psi(hl)), hl));
    }
}

TEST_CASE("the substitution morphism respects products") {
  const unsigned cap = 6;
  SymFunc f = add(H({2, 1}, cap), scale(H({1}, cap), Rational(2)));
  SymFunc g = add(H({3}, cap), scale(H({1, 1}, cap), Rational(-1)));
  CHECK(same_function(psi(multiply(f, g)), multiply(psi(f), psi(g))));
  SymFunc p = add(H({2}, cap), scale(SymFunc::one(cap), Rational(1, 2)));
  SymFunc q = add(H({2, 2}, cap), scale(H({4}, cap), Rational(-3)));
  CHECK(same_function(psi(multiply(p, q)), multiply(psi(p), psi(q))));
  CHECK(same_function(psi(add(f, g)), add(psi(f), psi(g))));
}

TEST_CASE("dual basis at low weight, frozen") {
  CHECK(same_function(g_basis(P({})), SymFunc::one()));
  CHECK(g_basis(P({1})).terms == T({{{1}, -1}}));
  CHECK(g_basis(P({2})).terms == T({{{1, 1}, 1}, {{2}, -2}}));
  CHECK(g_basis(P({1, 1})).terms == T({{{2}, 3}, {{1, 1}, -1}}));
  CHECK_THROWS_AS(g_basis(P({4, 3}), 6), Error);
}

TEST_CASE("dual basis pairs to the identity against inverse-series products") {
  for (unsigned w = 0; w <= 5; ++w)
    for (const Partition& lam : partitions_of(w))
      for (const Partition& mu : partitions_of(w))
        CHECK(hall_pairing(g_basis(lam), hstar_product(mu)) ==
              (lam == mu ? Rational(1) : Rational(0)));

  for (unsigned w = 0; w <= 6; ++w)
    for (const Partition& lam : partitions_of(w))
      for (const auto& [p, c] : g_basis(lam).terms) CHECK(p.weight() == w);
}

TEST_CASE("expansion in the dual basis") {
  for (unsigned w = 0; w <= 5; ++w)
    for (const Partition& lam : partitions_of(w)) {
      std::map<Partition, Rational> e = expand_in_g(g_basis(lam));
      std::map<Partition, Rational> expected{{lam, Rational(1)}};
      CHECK(e == expected);
    }

  // h_(1,1) = g_(1) * g_(1) expands with the transposition-class constants
  std::map<Partition, Rational> sq = expand_in_g(H({1, 1}));
  CHECK(sq == std::map<Partition, Rational>{{P({2}), Rational(3)}, {P({1, 1}), Rational(2)}});
}

TEST_CASE("ring isomorphism spot checks against brute force class sums") {
  MacdonaldReport r = macdonald_check(P({1}), P({1}));
  CHECK(r.ok());
  CHECK(r.g_side == std::map<Partition, Rational>{{P({2}), Rational(3)},
                                                  {P({1, 1}), Rational(2)}});
  CHECK(r.class_side == std::map<Partition, std::uint64_t>{{P({2}), 3}, {P({1, 1}), 2}});

  MacdonaldReport trivial = macdonald_check(P({}), P({2, 1}));
  CHECK(trivial.ok());
  CHECK(trivial.class_side == std::map<Partition, std::uint64_t>{{P({2, 1}), 1}});

  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = a; a + b <= 4; ++b)
      for (const Partition& lam : partitions_of(a))
        for (const Partition& mu : partitions_of(b)) CHECK(macdonald_check(lam, mu).ok());

  CHECK(macdonald_check(P({2, 1}), P({2})).ok());
  CHECK(macdonald_check(P({1, 1, 1}), P({1, 1, 1})).ok());

  CHECK_THROWS_AS(macdonald_check(P({2, 2}), P({2, 2})), Error);
}

TEST_CASE("symmetric function display") {
  CHECK(SymFunc::zero().str() == "0");
  CHECK(SymFunc::one().str() == "1");
  CHECK(scale(SymFunc::one(), Rational(5, 2)).str() == "5/2");
  CHECK(g_basis(P({2})).str() == "h[1,1] - 2*h[2]");
  CHECK(g_basis(P({1})).str() == "-h[1]");
  CHECK(h_to_m(P({2, 1})).str() == "3*m[1,1,1] + 2*m[2,1] + m[3]");
  CHECK(add(M({2}), scale(M({1, 1}), Rational(-1, 3))).str() == "-1/3*m[1,1] + m[2]");
}
