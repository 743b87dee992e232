#pragma once

#include <utility>

#include "spinlift/metric.hpp"

namespace spinlift {

/// An element L of so(g), stored in mixed-index form L^a_b, i.e. as the
/// linear map w -> L w. Skewness is with respect to the attached metric:
/// L^T g + g L = 0.
class Bivector {
 public:
  /// Validates skewness (1e-10 relative to max(1, |L|_max)) and
  /// tracelessness; throws Error(kInvalidBivector).
  Bivector(const Metric& g, const Mat4& entries);

  static Bivector zero(const Metric& g) { return Bivector(g, Mat4::Zero(), Unchecked{}); }

  /// L = F g for antisymmetric F. Always a valid bivector.
  static Bivector from_coefficients(const Metric& g, const Mat4& antisymmetric);

  const Mat4& matrix() const { return entries_; }
  const Metric& metric() const { return metric_; }

  /// F = L g^{-1}: the antisymmetric coefficient matrix, with
  /// wedge(e_a, e_b) having F = e_a e_b^T - e_b e_a^T.
  Mat4 coefficients() const { return entries_ * metric_.inverse(); }

  double norm() const { return max_abs(entries_); }

  Bivector operator+(const Bivector& o) const;
  Bivector operator-(const Bivector& o) const;
  Bivector operator-() const { return Bivector(metric_, -entries_, Unchecked{}); }
  friend Bivector operator*(double s, const Bivector& b) {
    return Bivector(b.metric_, s * b.entries_, Unchecked{});
  }
  Bivector operator*(double s) const { return s * *this; }

  /// [L1, L2] = L1 L2 - L2 L1.
  Bivector commutator(const Bivector& o) const;

 private:
  struct Unchecked {};
  Bivector(const Metric& g, const Mat4& entries, Unchecked) : metric_(g), entries_(entries) {}

  Metric metric_;
  Mat4 entries_;
};

/// Roots of x^2 + tr2(L) x + det(L) = 0 with mu_plus >= mu_minus.
struct MuPair {
  double mu_plus = 0.0;
  double mu_minus = 0.0;

  double gap() const { return mu_plus - mu_minus; }
};

struct OrthogonalDecomposition {
  Bivector plus;   // boost-like: tr2 = -mu_plus <= 0
  Bivector minus;  // rotation-like: tr2 = -mu_minus >= 0
  MuPair mu;
};

inline constexpr double kSimpleTolerance = 1e-9;
inline constexpr double kDecompositionGapTolerance = 1e-8;
inline constexpr double kDegeneratePlaneTolerance = 1e-9;

/// (u ^ v)(w) = g(v, w) u - g(u, w) v.
Bivector wedge(const Metric& g, const Vec4& u, const Vec4& v);

/// Second-order trace, -1/2 tr L^2.
double tr2(const Bivector& l);

double det_bivector(const Bivector& l);

/// Throws Error(kNegativeDiscriminant) when the discriminant is negative
/// beyond round-off, which cannot happen for a real Lorentz bivector.
MuPair mu_roots(const Bivector& l);

/// |det L| <= tol * max(1, |L|_max^4).
bool is_simple(const Bivector& l, double tol = kSimpleTolerance);

/// The unique splitting L = L+ + L- into mutually annihilating simple
/// bivectors, L+- = +-(L^3 - mu_-+ L) / (mu_+ - mu_-).
/// Throws Error(kSimpleInput) when is_simple(L) or mu_+ - mu_- <= 1e-8 max(1, |L|_max^2).
OrthogonalDecomposition orthogonal_decompose(const Bivector& l);

/// g-orthogonal projection -L^2 / tr2(L) onto the plane of a simple,
/// nondegenerate L. Throws Error(kDegeneratePlane).
Mat4 plane_projection(const Bivector& l);

/// Factors a simple bivector as L = a ^ b, taking the two dominant columns
/// of L g^{-1} by column-pivoted elimination and rescaling the first.
/// Throws Error(kNotSimple) when L is not numerically of rank two.
std::pair<Vec4, Vec4> simple_factors(const Bivector& l);

}  // namespace spinlift
