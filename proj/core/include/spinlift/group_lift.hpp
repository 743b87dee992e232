#pragma once

#include <algorithm>
#include <cmath>
#include <string_view>
#include <utility>

#include "spinlift/bivector.hpp"
#include "spinlift/clifford.hpp"
#include "spinlift/error.hpp"
#include "spinlift/lorentz_transformation.hpp"

namespace spinlift {

/// Simplicity criterion tolerance: |tr2 Lam - 2(tr Lam - 1)| relative to
/// max(1, tr2 Lam, tr Lam).
inline constexpr double kTransformSimpleTolerance = 1e-9;
/// Criterion used by lift and log_transform, at rounding level. On
/// Lam = exp(L+ + L-) with a small second angle the simple formulas are off
/// by O(theta+ theta-) while the criterion only sees theta+^2 theta-^2, so
/// anything not simple to rounding goes through the nonsimple route.
inline constexpr double kStrictSimpleTolerance = 1e-15;
/// |tr Lam - 4| below this (relative to max(1, |Lam|_max)) is parabolic.
inline constexpr double kParabolicTolerance = 1e-9;
/// Window accepted by lift_special: |tr Lam| <= 1e-6 max(1, |Lam|_max).
inline constexpr double kTracelessTolerance = 1e-6;
/// Below this trace the generic simple formulas lose more accuracy than
/// the traceless algorithm; relative to max(1, |Lam|_max^2), since rounding
/// in Lam - Lam^{-1} grows with the square of the boost content.
inline constexpr double kTracelessRoutingTolerance = 1e-14;
/// Window accepted by lift_nonsimple_special: |2 + 2 tr Lam + tr2 Lam| <=
/// 1e-6 max(1, |Lam|_max^2). lift_nonsimple refuses the same window; there
/// 2 + 2 tr + tr2 = tr Lam+ tr Lam- is formed by cancellation and the
/// four-term formula loses about eps |Lam|^2 / (2 + 2 tr + tr2).
inline constexpr double kSpecialDenominatorTolerance = 1e-6;
inline constexpr double kFactorGapTolerance = 1e-8;
/// Third-pivot threshold when extracting a plane basis from a projector.
inline constexpr double kPivotTolerance = 1e-7;

/// 1/2 (tr^2 Lam - tr Lam^2).
double tr2_transform(const LorentzTransformation& lam);

/// True when a simple Lam should go through the traceless algorithms.
inline bool routes_to_traceless(const LorentzTransformation& lam) {
  const double n = lam.norm();
  return lam.trace() <= kTracelessRoutingTolerance * std::max(1.0, n * n);
}

/// |tr2 Lam - 2(tr Lam - 1)| <= tol max(1, tr2 Lam, tr Lam).
bool is_simple_transform(const LorentzTransformation& lam, double tol = kTransformSimpleTolerance);

/// 2 + 2 tr Lam + tr2 Lam; vanishes exactly when the rotation-like factor
/// of Lam is traceless.
double lift_denominator(const LorentzTransformation& lam);

enum class LogBranch { kIdentity, kTrig, kHyperbolic, kParabolic, kTraceless, kFactored };

std::string_view to_string(LogBranch b);

/// Angle of a simple Lam: theta with tr Lam = 2 + 2 cos theta, or phi with
/// tr Lam = 2 + 2 cosh phi when tr Lam > 4. The sine is read off
/// tr2(Lam - Lam^{-1}) = 4 sin^2 theta (-4 sinh^2 phi) and the cosine off the
/// trace, which keeps both ends of [0, pi] well conditioned.
struct SimpleAngle {
  double angle = 0.0;
  double sqrt_trace = 2.0;  // 2 cos(theta/2) or 2 cosh(phi/2)
  bool hyperbolic = false;
};

SimpleAngle simple_angle(const LorentzTransformation& lam);

struct SimpleLog {
  Bivector generator;  // L with exp(L) = Lam
  double mu = 0.0;     // tr2 L = -mu
  double k = 0.0;      // L = 1/2 k (Lam - Lam^{-1})
  LogBranch branch = LogBranch::kIdentity;
};

/// Logarithm of a simple transformation with tr Lam > 0:
///   0 < tr < 4: k = theta / sin theta, theta = arccos(tr/2 - 1), mu = -theta^2
///   tr > 4:     k = phi / sinh phi,    phi = arccosh(tr/2 - 1),  mu = phi^2
///   tr = 4:     k = 1, mu = 0 (null rotations; L = 0 at the identity)
/// Throws Error(kNotSimple) or Error(kTracelessSimple).
SimpleLog log_simple(const LorentzTransformation& lam);

/// A generator of the simple traceless transformation Lam (a half turn):
/// pi / sqrt(tr2(u ^ v)) u ^ v for a basis u, v of the image of
/// 1/2 (I - Lam). The sign is arbitrary.
Bivector log_traceless(const LorentzTransformation& lam);

/// g-orthogonal projection 1/2 (I - Lam) of a traceless simple Lam.
Mat4 traceless_projection(const LorentzTransformation& lam);

/// Two columns of p spanning its image, chosen by column-pivoted QR.
/// Throws Error(kRankDeficiency) unless p has numerical rank two.
std::pair<Vec4, Vec4> plane_basis(const Mat4& p);

struct FactorPair {
  LorentzTransformation lambda_plus;   // boost-like, tr = 2(1 + c_plus) >= 4
  LorentzTransformation lambda_minus;  // rotation-like, tr = 2(1 + c_minus)
  double c_plus = 1.0;
  double c_minus = 1.0;
  double delta = 0.0;  // tr^2 Lam - 4 tr2 Lam + 8
};

/// Lam = Lam+ Lam- with commuting simple factors
///   Lam+- = +-1/(2(c+ - c-)) {(1 + 2c+-) I - Lam^{-1} - (1 + 2c-+) Lam + Lam^2},
///   c+- = 1/4 (tr Lam +- sqrt(Delta)).
/// Also valid for simple Lam (one factor is then the identity).
/// Throws Error(kSimpleTransform) when c+ - c- <= 1e-8.
FactorPair factor_transform(const LorentzTransformation& lam);

struct TransformLog {
  Bivector generator;
  LogBranch branch;
  bool simple;
};

/// A generator of any proper orthochronous Lam: log_simple, log_traceless,
/// or the sum of the logarithms of the two factors.
TransformLog log_transform(const LorentzTransformation& lam);

//===----------------------------------------------------------------------===//
// Spin lifts Sigma(Lam), each defined up to an overall sign
//===----------------------------------------------------------------------===//

namespace detail {

inline double trace_scale(const LorentzTransformation& lam) { return std::max(1.0, lam.norm()); }

inline double denominator_scale(const LorentzTransformation& lam) {
  const double n = lam.norm();
  return std::max(1.0, n * n);
}

/// (tr Lam I + 2 sigma(Lam - Lam^{-1})) / (2 sqrt(tr Lam)), no precondition
/// checks. sqrt(tr Lam) comes from simple_angle rather than the raw trace.
template <CliffordRepresentation Rep>
typename Rep::Matrix simple_lift_formula(const LorentzTransformation& lam, const Rep& rep) {
  const double root = simple_angle(lam).sqrt_trace;
  return 0.5 * root * rep.identity() + spin_rep(rep, lam.skew_part()) / root;
}

template <CliffordRepresentation Rep>
typename Rep::Matrix nonsimple_lift_formula(const LorentzTransformation& lam, const Rep& rep) {
  const double t1 = lam.trace();
  const double t2 = tr2_transform(lam);
  const typename Rep::Matrix d1 = spin_rep(rep, lam.skew_part());
  const typename Rep::Matrix d2 = spin_rep(rep, lam.skew_part_squared());
  const typename Rep::Matrix numerator =
      (2.0 + t1 + t2 - 0.25 * t1 * t1) * rep.identity() + (t1 + 2.0) * d1 - d2 + d1 * d1;
  return numerator / (2.0 * std::sqrt(2.0 + 2.0 * t1 + t2));
}

template <CliffordRepresentation Rep>
typename Rep::Matrix special_lift_formula(const LorentzTransformation& lam, const Rep& rep) {
  const auto [u, v] = plane_basis(traceless_projection(lam));
  const Bivector plane = wedge(lam.metric(), u, v);
  const double t = tr2(plane);
  if (!(t > 0.0)) {
    throw Error(ErrorCode::kDegeneratePlane, "half-turn plane is not spacelike");
  }
  return (2.0 / std::sqrt(t)) * spin_rep(rep, plane);
}

/// Simple factor lift that routes near-traceless inputs to the traceless
/// algorithm.
template <CliffordRepresentation Rep>
typename Rep::Matrix simple_factor_lift(const LorentzTransformation& lam, const Rep& rep) {
  if (routes_to_traceless(lam)) {
    return special_lift_formula(lam, rep);
  }
  return simple_lift_formula(lam, rep);
}

}  // namespace detail

/// Sigma(Lam) = (tr Lam I + 2 sigma(Lam - Lam^{-1})) / (2 sqrt(tr Lam)).
/// Throws Error(kNotSimple) or Error(kTracelessSimple).
template <CliffordRepresentation Rep>
typename Rep::Matrix lift_simple(const LorentzTransformation& lam, const Rep& rep) {
  if (!is_simple_transform(lam)) throw Error(ErrorCode::kNotSimple, "lift_simple: transformation is not simple");
  if (routes_to_traceless(lam)) {
    throw Error(ErrorCode::kTracelessSimple, "lift_simple: traceless input; use lift_special");
  }
  return detail::simple_lift_formula(lam, rep);
}

/// Sigma(Lam) = {(2 + t1 + t2 - t1^2/4) I + (t1 + 2) sigma(Lam - Lam^{-1})
///               - sigma(Lam^2 - Lam^{-2}) + sigma(Lam - Lam^{-1})^2}
///              / (2 sqrt(2 + 2 t1 + t2)),   t1 = tr Lam, t2 = tr2 Lam.
/// Throws Error(kNotNonsimple) or Error(kDegenerateDenominator).
template <CliffordRepresentation Rep>
typename Rep::Matrix lift_nonsimple(const LorentzTransformation& lam, const Rep& rep) {
  if (is_simple_transform(lam)) throw Error(ErrorCode::kNotNonsimple, "lift_nonsimple: transformation is simple");
  if (lift_denominator(lam) <= kSpecialDenominatorTolerance * detail::denominator_scale(lam)) {
    throw Error(ErrorCode::kDegenerateDenominator,
                "lift_nonsimple: 2 + 2 tr + tr2 vanishes; use lift_nonsimple_special");
  }
  return detail::nonsimple_lift_formula(lam, rep);
}

/// Sigma(Lam) = 2 / sqrt(tr2(u ^ v)) sigma(u ^ v) for a simple traceless
/// Lam, with u, v spanning the image of 1/2 (I - Lam).
/// Throws Error(kNotSimple), Error(kNotTraceless), Error(kRankDeficiency).
template <CliffordRepresentation Rep>
typename Rep::Matrix lift_special(const LorentzTransformation& lam, const Rep& rep) {
  if (!is_simple_transform(lam)) throw Error(ErrorCode::kNotSimple, "lift_special: transformation is not simple");
  if (std::abs(lam.trace()) > kTracelessTolerance * detail::trace_scale(lam)) {
    throw Error(ErrorCode::kNotTraceless, "lift_special: transformation is not traceless");
  }
  return detail::special_lift_formula(lam, rep);
}

/// Nonsimple Lam whose rotation-like factor is traceless: lift the factors
/// of factor_transform separately and multiply.
template <CliffordRepresentation Rep>
typename Rep::Matrix lift_nonsimple_special(const LorentzTransformation& lam, const Rep& rep) {
  if (std::abs(lift_denominator(lam)) > kSpecialDenominatorTolerance * detail::denominator_scale(lam)) {
    throw Error(ErrorCode::kNotTraceless,
                "lift_nonsimple_special: 2 + 2 tr + tr2 does not vanish");
  }
  const FactorPair f = factor_transform(lam);
  return detail::simple_factor_lift(f.lambda_plus, rep) * detail::simple_factor_lift(f.lambda_minus, rep);
}

enum class LiftBranch {
  kIdentity,
  kSimpleTrig,
  kSimpleHyperbolic,
  kSimpleParabolic,
  kSpecialTraceless,
  kNonsimpleGeneric,
  kNonsimpleSpecial,
};

std::string_view to_string(LiftBranch b);

template <CliffordRepresentation Rep>
struct LiftResult {
  typename Rep::Matrix value;
  LiftBranch branch;
};

/// Spin lift of any proper orthochronous transformation.
template <CliffordRepresentation Rep>
LiftResult<Rep> lift(const LorentzTransformation& lam, const Rep& rep) {
  const double tr = lam.trace();
  if (is_simple_transform(lam, kStrictSimpleTolerance)) {
    if (routes_to_traceless(lam)) {
      return {detail::special_lift_formula(lam, rep), LiftBranch::kSpecialTraceless};
    }
    LiftBranch branch = LiftBranch::kSimpleTrig;
    if (max_abs(lam.matrix() - Mat4::Identity()) == 0.0) {
      branch = LiftBranch::kIdentity;
    } else if (std::abs(tr - 4.0) <= kParabolicTolerance * detail::trace_scale(lam)) {
      branch = LiftBranch::kSimpleParabolic;
    } else if (tr > 4.0) {
      branch = LiftBranch::kSimpleHyperbolic;
    }
    return {detail::simple_lift_formula(lam, rep), branch};
  }
  if (lift_denominator(lam) <= kSpecialDenominatorTolerance * detail::denominator_scale(lam)) {
    const FactorPair f = factor_transform(lam);
    return {detail::simple_factor_lift(f.lambda_plus, rep) * detail::simple_factor_lift(f.lambda_minus, rep),
            LiftBranch::kNonsimpleSpecial};
  }
  return {detail::nonsimple_lift_formula(lam, rep), LiftBranch::kNonsimpleGeneric};
}

/// Fixes the overall sign for reporting: the first entry (row-major) whose
/// modulus is within 1e-9 of the largest gets a positive real part, or a
/// positive imaginary part when that entry is mostly imaginary.
template <class Matrix>
Matrix normalize_sign(const Matrix& m) {
  const double largest = m.cwiseAbs().maxCoeff();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const std::complex<double> x(m(r, c));
      if (std::abs(x) >= largest * (1.0 - 1e-9)) {
        const double key = std::abs(x.real()) >= std::abs(x.imag()) ? x.real() : x.imag();
        return key < 0.0 ? Matrix(-m) : m;
      }
    }
  }
  return m;
}

}  // namespace spinlift
