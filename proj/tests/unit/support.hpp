#pragma once

#include <cmath>
#include <numbers>

#include "spinlift/spinlift.hpp"

namespace spinlift::testing {

inline Vec4 e(int i) { return Vec4::Unit(i); }

template <class Derived>
double max_entry(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

inline Bivector boost01(const Metric& g, double t = 1.0) { return t * wedge(g, e(0), e(1)); }
inline Bivector rot23(const Metric& g, double t = 1.0) { return t * wedge(g, e(2), e(3)); }

inline LorentzTransformation exp_transform(const Bivector& l) {
  return LorentzTransformation(l.metric(), exp_series(l.matrix()));
}

// Null rotation generator wedge(e0 + e3, e1): tr2 = 0, tr exp = 4.
inline Bivector null_rotation(const Metric& g, double t = 1.0) {
  return t * wedge(g, e(0) + e(3), e(1));
}

}  // namespace spinlift::testing
