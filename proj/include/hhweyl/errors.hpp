#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhweyl {

// Every failure the library reports deliberately goes through one of these.
// Kind::Input covers malformed or out-of-contract user data (CLI exit 2),
// Kind::Check covers a mathematical consistency check that did not hold
// for data that parsed fine (CLI exit 1). Subclasses stamp the operation
// they guard into the message so a bare what() identifies the origin.
class Error : public std::runtime_error {
public:
  enum class Kind { Input, Check };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Error(Kind kind, const char* origin, const std::string& message)
      : std::runtime_error(std::string(origin) + ": " + message), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(Kind::Input, "parse",
              what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(Kind::Input, "shape", what) {}
};

struct ConductorMismatch : Error {
  explicit ConductorMismatch(const std::string& what)
      : Error(Kind::Input, "exactmath/embed", what) {}
};

struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& what)
      : Error(Kind::Input, "exactmath/inverse", what) {}
};

struct NonInvertibleGenerator : Error {
  explicit NonInvertibleGenerator(const std::string& what)
      : Error(Kind::Input, "matgroup/closure", what) {}
};

struct GroupTooLarge : Error {
  explicit GroupTooLarge(const std::string& what)
      : Error(Kind::Input, "matgroup/closure", what) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& what)
      : Error(Kind::Input, "fhring/brute-force", what) {}
};

struct NotSymplectic : Error {
  explicit NotSymplectic(const std::string& what)
      : Error(Kind::Input, "matgroup/symplectic-check", what) {}
};

struct OddFilterDegree : Error {
  explicit OddFilterDegree(const std::string& what)
      : Error(Kind::Check, "matgroup/filtration-degree", what) {}
};

struct FiltrationViolation : Error {
  explicit FiltrationViolation(const std::string& what)
      : Error(Kind::Check, "centerfilt/filtration-check", what) {}
};

struct CrosscheckFailure : Error {
  explicit CrosscheckFailure(const std::string& what)
      : Error(Kind::Check, "crosscheck", what) {}
};

struct NonIntegerMultiplicity : Error {
  explicit NonIntegerMultiplicity(const std::string& what)
      : Error(Kind::Check, "chartab/multiplicity", what) {}
};

struct RouteMismatch : Error {
  explicit RouteMismatch(const std::string& what)
      : Error(Kind::Check, "chartab/d-routes", what) {}
};

struct StabilityFailure : Error {
  explicit StabilityFailure(const std::string& what)
      : Error(Kind::Check, "fhring/top-constants", what) {}
};

struct NonPolynomialFit : Error {
  explicit NonPolynomialFit(const std::string& what)
      : Error(Kind::Check, "fhring/interpolate", what) {}
};

struct SingularDualityBlock : Error {
  explicit SingularDualityBlock(const std::string& what)
      : Error(Kind::Check, "symfun/dual-basis", what) {}
};

}  // namespace hhweyl
