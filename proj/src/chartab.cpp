#include "hhweyl/chartab.hpp"

#include "hhweyl/errors.hpp"

namespace hhweyl {

std::uint32_t CharacterTable::identity_class() const {
  for (std::uint32_t c = 0; c < classes.size(); ++c)
    if (classes[c].order == 1) return c;
  throw Error(Error::Kind::Input, "character table has no identity class");
}

unsigned CharacterTable::degree() const {
  const Cyclotomic& v = chi.at(identity_class());
  if (!v.is_integer() || v.rational_value() <= 0)
    throw Error(Error::Kind::Input, "character degree must be a positive integer");
  return static_cast<unsigned>(v.rational_value().get_num().get_ui());
}

void CharacterTable::validate() const {
  const std::size_t s = classes.size();
  if (s == 0) throw Error(Error::Kind::Input, "character table has no classes");
  if (chi.size() != s || power_maps.size() != s)
    throw Error(Error::Kind::Input, "character table fields have mismatched lengths");
  std::size_t identities = 0;
  for (const auto& cls : classes) {
    if (cls.order == 0) throw Error(Error::Kind::Input, "element order must be positive");
    if (cls.size == 0) throw Error(Error::Kind::Input, "class size must be positive");
    if (cls.order == 1) ++identities;
  }
  if (identities != 1)
    throw Error(Error::Kind::Input, "character table needs exactly one class of order one");
  const std::uint32_t id = identity_class();
  degree();
  for (std::uint32_t c = 0; c < s; ++c) {
    const auto& pm = power_maps[c];
    if (pm.size() != classes[c].order)
      throw Error(Error::Kind::Input,
                  "power map of class " + std::to_string(c) + " must list order many classes");
    if (pm[0] != id)
      throw Error(Error::Kind::Input,
                  "power map of class " + std::to_string(c) + " must start at the identity");
    if (classes[c].order > 1 && pm[1] != c)
      throw Error(Error::Kind::Input,
                  "power map of class " + std::to_string(c) + " must fix the class at k = 1");
    for (const std::uint32_t target : pm)
      if (target >= s) throw Error(Error::Kind::Input, "power map points outside the table");
    // chi(g^(order-1)) = chi(g^-1) = conj(chi(g))
    if (chi[pm[classes[c].order - 1]] != chi[c].conjugate())
      throw Error(Error::Kind::Input,
                  "character values break conjugate symmetry on class " + std::to_string(c));
  }
}

CharacterTable CharacterTable::with_chi(std::vector<Cyclotomic> values) const {
  CharacterTable t = *this;
  t.chi = std::move(values);
  return t;
}

CharacterTable character_from_group(const FiniteMatrixGroup& g, const ClassData& cd,
                                    bool doubled) {
  CharacterTable t;
  t.doubled = doubled;
  const bool permutation_group = all_permutation_matrices(g);
  for (std::uint32_t c = 0; c < cd.classes.size(); ++c) {
    t.classes.push_back({class_display_label(g, cd, c, permutation_group),
                         cd.classes[c].size(), cd.classes[c].order});
    t.chi.push_back(g.elements[cd.classes[c].representative].trace().minimal());
  }
  t.power_maps = cd.power_maps;
  t.validate();
  return t;
}

std::vector<Cyclotomic> adams(const CharacterTable& t, long k) {
  std::vector<Cyclotomic> out;
  out.reserve(t.classes.size());
  for (std::uint32_t c = 0; c < t.classes.size(); ++c) {
    const long ord = t.classes[c].order;
    out.push_back(t.chi[t.power_maps[c][static_cast<std::size_t>(((k % ord) + ord) % ord)]]);
  }
  return out;
}

unsigned eigenvalue_one_multiplicity(const CharacterTable& t, std::uint32_t c) {
  const std::uint32_t ord = t.classes.at(c).order;
  Cyclotomic sum;
  for (std::uint32_t k = 0; k < ord; ++k) sum += t.chi[t.power_maps[c][k]];
  if (!sum.is_rational())
    throw NonIntegerMultiplicity("averaged character on class " + std::to_string(c) +
                                 " is irrational");
  const Rational avg = sum.rational_value() / Rational(static_cast<long>(ord));
  if (avg.get_den() != 1 || avg < 0 || avg > static_cast<long>(t.degree()))
    throw NonIntegerMultiplicity("averaged character on class " + std::to_string(c) + " gives " +
                                 avg.get_str() + ", not an eigenvalue multiplicity");
  return static_cast<unsigned>(avg.get_num().get_ui());
}

unsigned newton_multiplicity(const CharacterTable& t, std::uint32_t c) {
  const unsigned n = t.degree();
  const std::uint32_t ord = t.classes.at(c).order;
  // power sums p_k = chi(g^k)
  std::vector<Cyclotomic> p(n + 1);
  for (unsigned k = 1; k <= n; ++k) p[k] = t.chi[t.power_maps[c][k % ord]];
  // k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
  std::vector<Cyclotomic> e(n + 1);
  e[0] = Cyclotomic(1);
  for (unsigned k = 1; k <= n; ++k) {
    Cyclotomic acc;
    for (unsigned i = 1; i <= k; ++i) {
      const Cyclotomic term = e[k - i] * p[i];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc * Cyclotomic(Rational(1, k));
  }
  // prod (t - lambda) = sum_i (-1)^i e_i t^(n-i), stored ascending in t
  std::vector<Cyclotomic> poly(n + 1);
  for (unsigned i = 0; i <= n; ++i) poly[n - i] = (i % 2 ? -e[i] : e[i]);
  unsigned mult = 0;
  while (poly.size() > 1) {
    Cyclotomic at_one;
    for (const Cyclotomic& a : poly) at_one += a;
    if (!at_one.is_zero()) break;
    // exact synthetic division by (t - 1)
    std::vector<Cyclotomic> q(poly.size() - 1);
    Cyclotomic carry;
    for (std::size_t j = poly.size(); j-- > 1;) {
      carry += poly[j];
      q[j - 1] = carry;
    }
    poly = std::move(q);
    ++mult;
  }
  return mult;
}

unsigned d_from_character(const CharacterTable& t, std::uint32_t c, bool require_even) {
  const unsigned averaged = eigenvalue_one_multiplicity(t, c);
  const unsigned newton = newton_multiplicity(t, c);
  if (averaged != newton)
    throw RouteMismatch("eigenvalue-1 multiplicity on class " + std::to_string(c) +
                        ": averaging gives " + std::to_string(averaged) +
                        ", the characteristic polynomial gives " + std::to_string(newton));
  const unsigned n = t.degree();
  const unsigned d = t.doubled ? 2 * (n - averaged) : n - averaged;
  if (require_even && d % 2 != 0)
    throw OddFilterDegree("class " + std::to_string(c) + " has odd degree " + std::to_string(d));
  return d;
}

std::vector<unsigned> d_from_character_all(const CharacterTable& t, bool require_even) {
  std::vector<unsigned> out;
  out.reserve(t.classes.size());
  for (std::uint32_t c = 0; c < t.classes.size(); ++c)
    out.push_back(d_from_character(t, c, require_even));
  return out;
}

}  // namespace hhweyl
