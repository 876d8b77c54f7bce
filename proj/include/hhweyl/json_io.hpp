#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hhweyl/center.hpp"
#include "hhweyl/chartab.hpp"
#include "hhweyl/fhring.hpp"
#include "hhweyl/group.hpp"
#include "hhweyl/symfunc.hpp"

namespace hhweyl {

// All emitters return complete JSON documents as single-line strings with a
// fixed key order, so equal inputs give byte-equal output. Text renderings
// carry the same data in human-readable form.

struct GroupInput {
  std::size_t dim = 0;
  std::vector<ExactMatrix> generators;
  std::size_t cap = kDefaultClosureCap;
};

// { "dim": n, "generators": [ [["literal", ...], ...], ... ], "cap": optional }
// with matrices row-major and entries in the cyclotomic literal grammar.
GroupInput parse_group_input(const std::string& json_text);
std::string group_input_to_json(const GroupInput& in);  // canonical re-emit

// { "classes": [{"label","size","order"}], "power_maps": [[...]],
//   "chi": ["literal", ...], "doubled": bool }
CharacterTable parse_character_table(const std::string& json_text);
std::string character_table_to_json(const CharacterTable& t);

// { "betti": [...], "basis": [{"class","degree","size","label"}],
//   "table": [{"i","j","terms": [{"k","coeff"}]}] } with one table row per
// non-identity basis pair i <= j.
std::string ring_report_json(const GradedCenterRing& ring);
std::string ring_report_text(const GradedCenterRing& ring);

std::string betti_json(const GradedCenterRing& ring);
std::string betti_text(const GradedCenterRing& ring);

std::string group_report_json(const FiniteMatrixGroup& g, const ClassData& cd,
                              bool symplectic, const GradedCenterRing& ring);
std::string group_report_text(const FiniteMatrixGroup& g, const ClassData& cd,
                              bool symplectic, const GradedCenterRing& ring);

std::string chartab_d_json(const CharacterTable& t, const std::vector<unsigned>& d);
std::string chartab_d_text(const CharacterTable& t, const std::vector<unsigned>& d);

// { "lam": [...], "mu": [...], "n": n, "terms": [{"nu": [...], "a": int}] }
std::string fh_constants_json(const FHConstants& f);
std::string fh_constants_text(const FHConstants& f);

std::string fh_top_json(const Partition& lam, const Partition& mu,
                        const std::map<Partition, std::uint64_t>& terms);
std::string fh_top_text(const Partition& lam, const Partition& mu,
                        const std::map<Partition, std::uint64_t>& terms);

std::string fh_poly_json(const Partition& lam, const Partition& mu, const Partition& nu,
                         unsigned n_lo, unsigned n_hi, const IntegerValuedPolynomial& p);
std::string fh_poly_text(const Partition& lam, const Partition& mu, const Partition& nu,
                         unsigned n_lo, unsigned n_hi, const IntegerValuedPolynomial& p);

// { "basis": "h"|"m", "terms": [{"partition": [...], "coeff": "a/b"}] }
std::string symfunc_json(const SymFunc& f);

// Product of two dual-basis elements expanded back in that basis:
// { "basis": "g", "lam", "mu", "terms": [...] }
std::string g_product_json(const Partition& lam, const Partition& mu,
                           const std::map<Partition, Rational>& terms);
std::string g_product_text(const Partition& lam, const Partition& mu,
                           const std::map<Partition, Rational>& terms);

std::string macdonald_json(const MacdonaldReport& r);
std::string macdonald_text(const MacdonaldReport& r);

}  // namespace hhweyl
