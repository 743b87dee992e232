#include "spinlift/bivector.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "spinlift/error.hpp"

namespace spinlift {

namespace {

constexpr double kSkewTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-12;
constexpr double kDiscriminantTolerance = 1e-9;
constexpr double kRankTolerance = 1e-7;

}  // namespace

Bivector::Bivector(const Metric& g, const Mat4& entries) : metric_(g), entries_(entries) {
  if (!entries.allFinite()) {
    throw Error(ErrorCode::kInvalidBivector, "bivector has non-finite entries");
  }
  const double scale = std::max(1.0, max_abs(entries));
  const double skew = max_abs(entries.transpose() * g.matrix() + g.matrix() * entries);
  if (skew > kSkewTolerance * scale) {
    throw Error(ErrorCode::kInvalidBivector,
                "matrix is not g-skew: |L^T g + g L|_max = " + std::to_string(skew));
  }
  if (std::abs(entries.trace()) > kTraceTolerance * scale) {
    throw Error(ErrorCode::kInvalidBivector, "bivector is not traceless");
  }
}

Bivector Bivector::from_coefficients(const Metric& g, const Mat4& antisymmetric) {
  const Mat4 f = 0.5 * (antisymmetric - antisymmetric.transpose());
  return Bivector(g, f * g.matrix(), Unchecked{});
}

Bivector Bivector::operator+(const Bivector& o) const {
  assert(metric_ == o.metric_);
  return Bivector(metric_, entries_ + o.entries_, Unchecked{});
}

Bivector Bivector::operator-(const Bivector& o) const {
  assert(metric_ == o.metric_);
  return Bivector(metric_, entries_ - o.entries_, Unchecked{});
}

Bivector Bivector::commutator(const Bivector& o) const {
  assert(metric_ == o.metric_);
  return Bivector(metric_, entries_ * o.entries_ - o.entries_ * entries_, Unchecked{});
}

Bivector wedge(const Metric& g, const Vec4& u, const Vec4& v) {
  const Vec4 gu = g.matrix() * u;
  const Vec4 gv = g.matrix() * v;
  return Bivector(g, u * gv.transpose() - v * gu.transpose());
}

double tr2(const Bivector& l) { return -0.5 * (l.matrix() * l.matrix()).trace(); }

double det_bivector(const Bivector& l) { return l.matrix().determinant(); }

MuPair mu_roots(const Bivector& l) {
  const double t = tr2(l);
  const double d = det_bivector(l);
  double disc = t * t - 4.0 * d;
  if (disc < -kDiscriminantTolerance * std::max(1.0, t * t)) {
    throw Error(ErrorCode::kNegativeDiscriminant,
                "negative discriminant " + std::to_string(disc) +
                    "; input is not a real Lorentz bivector");
  }
  disc = std::max(disc, 0.0);
  const double root = std::sqrt(disc);

  // Compute the larger-magnitude root directly and the other from the
  // product, avoiding cancellation.
  MuPair mu;
  if (t >= 0.0) {
    mu.mu_minus = -0.5 * (t + root);
    mu.mu_plus = mu.mu_minus != 0.0 ? d / mu.mu_minus : 0.0;
  } else {
    mu.mu_plus = 0.5 * (-t + root);
    mu.mu_minus = mu.mu_plus != 0.0 ? d / mu.mu_plus : 0.0;
  }
  mu.mu_plus = std::max(mu.mu_plus, 0.0);
  mu.mu_minus = std::min(mu.mu_minus, 0.0);
  return mu;
}

bool is_simple(const Bivector& l, double tol) {
  const double n = l.norm();
  return std::abs(det_bivector(l)) <= tol * std::max(1.0, n * n * n * n);
}

OrthogonalDecomposition orthogonal_decompose(const Bivector& l) {
  const MuPair mu = mu_roots(l);
  const double n = l.norm();
  if (is_simple(l) || mu.gap() <= kDecompositionGapTolerance * std::max(1.0, n * n)) {
    throw Error(ErrorCode::kSimpleInput,
                "bivector is simple (mu+ - mu- = " + std::to_string(mu.gap()) +
                    "); no orthogonal decomposition");
  }
  const Mat4& m = l.matrix();
  const Mat4 cube = m * m * m;
  const double inv_gap = 1.0 / mu.gap();
  const Metric& g = l.metric();
  return OrthogonalDecomposition{
      Bivector(g, inv_gap * (cube - mu.mu_minus * m)),
      Bivector(g, -inv_gap * (cube - mu.mu_plus * m)),
      mu,
  };
}

Mat4 plane_projection(const Bivector& l) {
  const double t = tr2(l);
  const double n = l.norm();
  if (std::abs(t) <= kDegeneratePlaneTolerance * std::max(1.0, n * n)) {
    throw Error(ErrorCode::kDegeneratePlane,
                "tr2(L) vanishes; the plane of L is degenerate");
  }
  return -(l.matrix() * l.matrix()) / t;
}

std::pair<Vec4, Vec4> simple_factors(const Bivector& l) {
  const Mat4 f = l.coefficients();
  const double scale = max_abs(f);
  if (scale == 0.0) throw Error(ErrorCode::kNotSimple, "zero bivector has no factors");

  // Pivot 1: largest column. Pivot 2: largest residual after removing it.
  int first = 0;
  f.colwise().norm().maxCoeff(&first);
  const Vec4 c1 = f.col(first);
  const Vec4 q1 = c1.normalized();

  Mat4 residual = f - q1 * (q1.transpose() * f);
  int second = 0;
  const double pivot2 = residual.colwise().norm().maxCoeff(&second);
  if (pivot2 <= kRankTolerance * c1.norm()) {
    throw Error(ErrorCode::kNotSimple, "bivector coefficient matrix has rank below two");
  }
  const Vec4 c2 = f.col(second);
  const Vec4 q2 = residual.col(second).normalized();
  residual -= q2 * (q2.transpose() * residual);
  if (residual.colwise().norm().maxCoeff() > kRankTolerance * c1.norm()) {
    throw Error(ErrorCode::kNotSimple, "bivector coefficient matrix has rank above two");
  }

  // c1 ^ c2 spans the same plane, so it is a multiple of F.
  const Mat4 candidate = c1 * c2.transpose() - c2 * c1.transpose();
  const double lambda = candidate.cwiseProduct(f).sum() / f.squaredNorm();
  return {c1 / lambda, c2};
}

}  // namespace spinlift
