#include "spinlift/metric.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "spinlift/error.hpp"

namespace spinlift {

namespace {

constexpr double kDetTolerance = 1e-12;

Signature classify(const Mat4& g) {
  if (!g.isDiagonal(0.0)) return Signature::kGeneral;
  if (g.diagonal() == Vec4(1, -1, -1, -1)) return Signature::kPlusMinus;
  if (g.diagonal() == Vec4(-1, 1, 1, 1)) return Signature::kMinusPlus;
  return Signature::kGeneral;
}

}  // namespace

std::string_view signature_tag(Signature s) {
  switch (s) {
    case Signature::kPlusMinus: return "pmmm";
    case Signature::kMinusPlus: return "mppp";
    case Signature::kGeneral: return "general";
  }
  return "general";
}

std::optional<Signature> parse_signature(std::string_view tag) {
  if (tag == "pmmm" || tag == "+---") return Signature::kPlusMinus;
  if (tag == "mppp" || tag == "-+++") return Signature::kMinusPlus;
  return std::nullopt;
}

Metric::Metric() : Metric(Vec4(1, -1, -1, -1).asDiagonal().toDenseMatrix(), Signature::kPlusMinus) {}

Metric::Metric(const Mat4& g, Signature s) : g_(g), g_inv_(g.inverse()), signature_(s) {}

Metric Metric::make(Signature s) {
  switch (s) {
    case Signature::kPlusMinus:
      return Metric(Vec4(1, -1, -1, -1).asDiagonal().toDenseMatrix(), s);
    case Signature::kMinusPlus:
      return Metric(Vec4(-1, 1, 1, 1).asDiagonal().toDenseMatrix(), s);
    case Signature::kGeneral:
      break;
  }
  throw Error(ErrorCode::kInvalidMetric,
              "make_metric: only the diagonal signatures pmmm and mppp are constructible by tag");
}

Metric Metric::from_matrix(const Mat4& g) {
  if (!g.allFinite()) throw Error(ErrorCode::kInvalidMetric, "metric has non-finite entries");
  if (g != g.transpose()) throw Error(ErrorCode::kInvalidMetric, "metric is not symmetric");
  const double det = g.determinant();
  if (std::abs(det + 1.0) > kDetTolerance) {
    throw Error(ErrorCode::kInvalidMetric,
                "metric determinant is " + std::to_string(det) + ", expected -1");
  }
  return Metric(g, classify(g));
}

bool Metric::is_diagonal_unit() const {
  if (!g_.isDiagonal(0.0)) return false;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(g_(i, i)) != 1.0) return false;
  }
  return true;
}

double inner(const Metric& g, const Vec4& u, const Vec4& v) {
  return u.dot(g.matrix() * v);
}

}  // namespace spinlift
