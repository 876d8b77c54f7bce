#pragma once

#include <gmpxx.h>

#include <string>

namespace hhweyl {

// Exact arithmetic throughout. mpq_class keeps values canonical
// (gcd-reduced, denominator positive) after every operation.
using Rational = mpq_class;
using BigInt = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace hhweyl
