#include "spinlift/group_lift.hpp"

#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>

#include "spinlift/expmap.hpp"

namespace spinlift {

namespace {

constexpr double kPreserveTolerance = 1e-9;
constexpr double kDetTolerance = 1e-9;
constexpr double kOrthochronousTolerance = 1e-9;
constexpr double kNegativeTraceTolerance = 1e-9;
constexpr double kDiscriminantTolerance = 1e-9;

/// Unit timelike vector t of g and eps = g(t, t) = +-1.
std::pair<Vec4, double> timelike_axis(const Metric& g) {
  switch (g.signature()) {
    case Signature::kPlusMinus: return {Vec4::UnitX(), 1.0};
    case Signature::kMinusPlus: return {Vec4::UnitX(), -1.0};
    case Signature::kGeneral: break;
  }
  const Eigen::SelfAdjointEigenSolver<Mat4> eig(g.matrix());
  const Vec4& values = eig.eigenvalues();
  const int positives = static_cast<int>((values.array() > 0.0).count());
  // The odd one out: one positive among three negatives, or vice versa.
  int index = 0;
  for (int i = 0; i < 4; ++i) {
    if ((values[i] > 0.0) == (positives == 1)) index = i;
  }
  const Vec4 t = eig.eigenvectors().col(index) / std::sqrt(std::abs(values[index]));
  return {t, values[index] > 0.0 ? 1.0 : -1.0};
}

}  // namespace

//===----------------------------------------------------------------------===//
// LorentzTransformation
//===----------------------------------------------------------------------===//

LorentzTransformation::LorentzTransformation(const Metric& g, const Mat4& entries)
    : metric_(g), entries_(entries) {
  if (!entries.allFinite()) {
    throw Error(ErrorCode::kInvalidTransformation, "transformation has non-finite entries");
  }
  const double n = std::max(1.0, max_abs(entries));
  const double preserve = max_abs(entries.transpose() * g.matrix() * entries - g.matrix());
  if (preserve > kPreserveTolerance * n * n) {
    throw Error(ErrorCode::kInvalidTransformation,
                "transformation does not preserve g: defect " + std::to_string(preserve));
  }
  const double det = entries.determinant();
  if (std::abs(det - 1.0) > kDetTolerance * n * n * n * n) {
    throw Error(ErrorCode::kInvalidTransformation,
                "transformation is not proper: det = " + std::to_string(det));
  }
  const auto [t, eps] = timelike_axis(g);
  if (eps * inner(g, t, entries * t) < 1.0 - kOrthochronousTolerance) {
    throw Error(ErrorCode::kInvalidTransformation, "transformation is not orthochronous");
  }
  if (entries.trace() < -kNegativeTraceTolerance * n) {
    throw Error(ErrorCode::kInvalidTransformation, "transformation has negative trace");
  }
}

Bivector LorentzTransformation::skew_part() const { return Bivector(metric_, entries_ - inverse()); }

Bivector LorentzTransformation::skew_part_squared() const {
  const Mat4 sq = entries_ * entries_;
  return Bivector(metric_, sq - metric_.inverse() * sq.transpose() * metric_.matrix());
}

LorentzTransformation LorentzTransformation::operator*(const LorentzTransformation& o) const {
  return LorentzTransformation(metric_, entries_ * o.entries_);
}

//===----------------------------------------------------------------------===//
// Invariants and classification
//===----------------------------------------------------------------------===//

double tr2_transform(const LorentzTransformation& lam) {
  const double tr = lam.trace();
  return 0.5 * (tr * tr - (lam.matrix() * lam.matrix()).trace());
}

bool is_simple_transform(const LorentzTransformation& lam, double tol) {
  const double tr = lam.trace();
  const double t2 = tr2_transform(lam);
  return std::abs(t2 - 2.0 * (tr - 1.0)) <= tol * std::max({1.0, t2, tr});
}

double lift_denominator(const LorentzTransformation& lam) {
  return 2.0 + 2.0 * lam.trace() + tr2_transform(lam);
}

std::string_view to_string(LogBranch b) {
  switch (b) {
    case LogBranch::kIdentity: return "simple/identity";
    case LogBranch::kTrig: return "simple/trig";
    case LogBranch::kHyperbolic: return "simple/hyperbolic";
    case LogBranch::kParabolic: return "simple/parabolic";
    case LogBranch::kTraceless: return "special/traceless";
    case LogBranch::kFactored: return "nonsimple/factored";
  }
  return "unknown";
}

std::string_view to_string(LiftBranch b) {
  switch (b) {
    case LiftBranch::kIdentity: return "simple/identity";
    case LiftBranch::kSimpleTrig: return "simple/trig";
    case LiftBranch::kSimpleHyperbolic: return "simple/hyperbolic";
    case LiftBranch::kSimpleParabolic: return "simple/parabolic";
    case LiftBranch::kSpecialTraceless: return "special/traceless";
    case LiftBranch::kNonsimpleGeneric: return "nonsimple/generic";
    case LiftBranch::kNonsimpleSpecial: return "nonsimple/special";
  }
  return "unknown";
}

//===----------------------------------------------------------------------===//
// Logarithms
//===----------------------------------------------------------------------===//

SimpleAngle simple_angle(const LorentzTransformation& lam) {
  const double tr = lam.trace();
  const double skew = tr2(lam.skew_part());
  if (tr <= 4.0) {
    // sin theta from the skew part; 1/2 sqrt(tr (4 - tr)) loses half the
    // digits near a half turn.
    const double sin_t = 0.5 * std::sqrt(std::max(skew, 0.0));
    const double theta = std::atan2(sin_t, 0.5 * tr - 1.0);
    return {theta, 2.0 * std::cos(0.5 * theta), false};
  }
  const double phi = std::asinh(0.5 * std::sqrt(std::max(-skew, 0.0)));
  return {phi, 2.0 * std::cosh(0.5 * phi), true};
}

SimpleLog log_simple(const LorentzTransformation& lam) {
  if (!is_simple_transform(lam)) throw Error(ErrorCode::kNotSimple, "log_simple: transformation is not simple");
  const double tr = lam.trace();
  const double scale = std::max(1.0, lam.norm());
  if (routes_to_traceless(lam)) {
    throw Error(ErrorCode::kTracelessSimple, "log_simple: traceless input; use log_traceless");
  }

  SimpleLog out{Bivector::zero(lam.metric()), 0.0, 1.0, LogBranch::kParabolic};
  if (std::abs(tr - 4.0) <= kParabolicTolerance * scale) {
    // Limit of both other branches as mu -> 0.
    out.k = 1.0;
    out.mu = 0.0;
    out.branch = max_abs(lam.matrix() - Mat4::Identity()) == 0.0 ? LogBranch::kIdentity
                                                                 : LogBranch::kParabolic;
  } else {
    const SimpleAngle a = simple_angle(lam);
    if (a.hyperbolic) {
      out.k = 1.0 / sinh_over(a.angle);
      out.mu = a.angle * a.angle;
      out.branch = LogBranch::kHyperbolic;
    } else {
      out.k = 1.0 / sin_over(a.angle);
      out.mu = -a.angle * a.angle;
      out.branch = LogBranch::kTrig;
    }
  }
  out.generator = (0.5 * out.k) * lam.skew_part();
  return out;
}

Mat4 traceless_projection(const LorentzTransformation& lam) {
  return 0.5 * (Mat4::Identity() - lam.matrix());
}

std::pair<Vec4, Vec4> plane_basis(const Mat4& p) {
  const Eigen::ColPivHouseholderQR<Mat4> qr(p);
  const Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  const double first = std::abs(r(0, 0));
  if (first == 0.0 || std::abs(r(1, 1)) <= kPivotTolerance * first ||
      std::abs(r(2, 2)) > kPivotTolerance * first) {
    throw Error(ErrorCode::kRankDeficiency, "projector does not have numerical rank two");
  }
  const auto& perm = qr.colsPermutation().indices();
  return {p.col(perm(0)), p.col(perm(1))};
}

Bivector log_traceless(const LorentzTransformation& lam) {
  const auto [u, v] = plane_basis(traceless_projection(lam));
  const Bivector plane = wedge(lam.metric(), u, v);
  const double t = tr2(plane);
  if (!(t > 0.0)) throw Error(ErrorCode::kDegeneratePlane, "half-turn plane is not spacelike");
  return (std::numbers::pi / std::sqrt(t)) * plane;
}

TransformLog log_transform(const LorentzTransformation& lam) {
  auto simple_log = [&]() -> TransformLog {
    if (routes_to_traceless(lam)) return {log_traceless(lam), LogBranch::kTraceless, true};
    const SimpleLog s = log_simple(lam);
    return {s.generator, s.branch, true};
  };
  if (is_simple_transform(lam, kStrictSimpleTolerance)) return simple_log();
  const double t1 = lam.trace();
  const double delta = t1 * t1 - 4.0 * tr2_transform(lam) + 8.0;
  if (0.5 * std::sqrt(std::max(delta, 0.0)) <= kFactorGapTolerance) {
    // c+ = c- = 1 up to rounding: both angles are tiny and the simple
    // formula's O(theta+^2 theta-) error is below rounding.
    return simple_log();
  }
  const FactorPair f = factor_transform(lam);
  auto factor_log = [&](const LorentzTransformation& factor) {
    if (routes_to_traceless(factor)) return log_traceless(factor);
    return log_simple(factor).generator;
  };
  return {factor_log(f.lambda_plus) + factor_log(f.lambda_minus), LogBranch::kFactored, false};
}

//===----------------------------------------------------------------------===//
// Factorization
//===----------------------------------------------------------------------===//

FactorPair factor_transform(const LorentzTransformation& lam) {
  const double t1 = lam.trace();
  const double t2 = tr2_transform(lam);
  double delta = t1 * t1 - 4.0 * t2 + 8.0;
  if (delta < -kDiscriminantTolerance * std::max(1.0, t1 * t1)) {
    throw Error(ErrorCode::kInvalidTransformation,
                "factor_transform: negative discriminant " + std::to_string(delta));
  }
  delta = std::max(delta, 0.0);
  const double root = std::sqrt(delta);
  const double c_plus = 0.25 * (t1 + root);
  const double c_minus = 0.25 * (t1 - root);
  if (c_plus - c_minus <= kFactorGapTolerance) {
    throw Error(ErrorCode::kSimpleTransform,
                "factor_transform: c+ - c- = " + std::to_string(c_plus - c_minus) + " is below threshold");
  }

  const Mat4& m = lam.matrix();
  const Mat4 id = Mat4::Identity();
  const Mat4 inv = lam.inverse();
  const Mat4 sq = m * m;
  const double scale = 1.0 / (2.0 * (c_plus - c_minus));
  const Mat4 plus = scale * ((1.0 + 2.0 * c_plus) * id - inv - (1.0 + 2.0 * c_minus) * m + sq);
  const Mat4 minus = -scale * ((1.0 + 2.0 * c_minus) * id - inv - (1.0 + 2.0 * c_plus) * m + sq);

  const Metric& g = lam.metric();
  return FactorPair{LorentzTransformation(g, plus), LorentzTransformation(g, minus), c_plus, c_minus, delta};
}

}  // namespace spinlift
