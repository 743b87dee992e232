#pragma once

#include "spinlift/bivector.hpp"
#include "spinlift/metric.hpp"

namespace spinlift {

/// A proper orthochronous Lorentz transformation: Lam^T g Lam = g,
/// det Lam = 1, time orientation preserved.
///
/// Time orientation is tested against the unit timelike eigenvector t of
/// g (for the diagonal signatures, t = e0): Lam is orthochronous when
/// eps g(t, Lam t) >= 1 - 1e-9, with eps = sign g(t, t). For pmmm and mppp
/// this is the entry condition Lam^0_0 >= 1 - 1e-9.
class LorentzTransformation {
 public:
  /// Throws Error(kInvalidTransformation) on any violated invariant. The
  /// metric-preservation and determinant tolerances are 1e-9 relative to
  /// max(1, |Lam|_max^2) and max(1, |Lam|_max^4).
  LorentzTransformation(const Metric& g, const Mat4& entries);

  static LorentzTransformation identity(const Metric& g) {
    return LorentzTransformation(g, Mat4::Identity());
  }

  const Mat4& matrix() const { return entries_; }
  const Metric& metric() const { return metric_; }

  /// Lam^{-1} = g^{-1} Lam^T g.
  Mat4 inverse() const { return metric_.inverse() * entries_.transpose() * metric_.matrix(); }

  double trace() const { return entries_.trace(); }
  double norm() const { return max_abs(entries_); }

  /// Lam - Lam^{-1}, which is always g-skew.
  Bivector skew_part() const;
  /// Lam^2 - Lam^{-2}.
  Bivector skew_part_squared() const;

  LorentzTransformation operator*(const LorentzTransformation& o) const;

 private:
  Metric metric_;
  Mat4 entries_;
};

}  // namespace spinlift
