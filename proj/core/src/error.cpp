#include "spinlift/error.hpp"

namespace spinlift {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidMetric: return "InvalidMetric";
    case ErrorCode::kNonDiagonalMetric: return "NonDiagonalMetric";
    case ErrorCode::kInvalidBivector: return "InvalidBivector";
    case ErrorCode::kNegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::kSimpleInput: return "SimpleInput";
    case ErrorCode::kDegeneratePlane: return "DegeneratePlane";
    case ErrorCode::kInvalidTransformation: return "InvalidTransformation";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kNotNonsimple: return "NotNonsimple";
    case ErrorCode::kTracelessSimple: return "TracelessSimple";
    case ErrorCode::kNotTraceless: return "NotTraceless";
    case ErrorCode::kSimpleTransform: return "SimpleTransform";
    case ErrorCode::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::kRankDeficiency: return "RankDeficiency";
    case ErrorCode::kSingularSigma: return "SingularSigma";
  }
  return "Unknown";
}

}  // namespace spinlift
