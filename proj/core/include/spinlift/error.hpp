#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinlift {

enum class ErrorCode {
  kInvalidMetric,
  kNonDiagonalMetric,
  kInvalidBivector,
  kNegativeDiscriminant,
  kSimpleInput,
  kDegeneratePlane,
  kInvalidTransformation,
  kNotSimple,
  kNotNonsimple,
  kTracelessSimple,
  kNotTraceless,
  kSimpleTransform,
  kDegenerateDenominator,
  kRankDeficiency,
  kSingularSigma,
};

/// Stable machine-readable name, e.g. "SimpleInput".
std::string_view to_string(ErrorCode code);

/// Every domain failure in the library surfaces as this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinlift
