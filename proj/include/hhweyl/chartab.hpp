#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hhweyl/cyclotomic.hpp"
#include "hhweyl/group.hpp"

namespace hhweyl {

struct CharClass {
  std::string label;
  std::uint64_t size = 1;
  std::uint32_t order = 1;
};

// One character of a finite group presented purely by class data: sizes,
// element orders, power maps and the character values. Rich enough to
// recover eigenvalue multiplicities without ever seeing a matrix.
struct CharacterTable {
  std::vector<CharClass> classes;
  // power_maps[c][k] = class of g^k for g in class c, k = 0..order-1
  std::vector<std::vector<std::uint32_t>> power_maps;
  std::vector<Cyclotomic> chi;
  // chi is the character of V + V* rather than of the symplectic space itself
  bool doubled = false;

  std::uint32_t identity_class() const;
  unsigned degree() const;  // chi at the identity

  // Structural checks plus conjugate symmetry chi(g^(order-1)) = conj(chi(g)).
  // Throws on malformed data.
  void validate() const;

  CharacterTable with_chi(std::vector<Cyclotomic> values) const;
};

// The tautological character of a matrix group: traces of representatives.
CharacterTable character_from_group(const FiniteMatrixGroup& g, const ClassData& cd,
                                    bool doubled = false);

// Adams operation psi^k: value chi(g^k) on each class.
std::vector<Cyclotomic> adams(const CharacterTable& t, long k);

// Multiplicity of eigenvalue 1 on class c, computed by averaging chi over
// the powers of a representative. Throws NonIntegerMultiplicity when the
// average is not an integer in [0, degree].
unsigned eigenvalue_one_multiplicity(const CharacterTable& t, std::uint32_t c);

// The same multiplicity via Newton's identities: rebuild the characteristic
// polynomial from the power sums chi(g^k) and strip factors of (t - 1).
unsigned newton_multiplicity(const CharacterTable& t, std::uint32_t c);

// Filtration degree of a class from character data alone. Runs both
// multiplicity routes and throws RouteMismatch if they disagree; for a
// doubled character d = 2 (degree - mult), otherwise d = degree - mult.
unsigned d_from_character(const CharacterTable& t, std::uint32_t c, bool require_even = true);

std::vector<unsigned> d_from_character_all(const CharacterTable& t, bool require_even = true);

}  // namespace hhweyl
