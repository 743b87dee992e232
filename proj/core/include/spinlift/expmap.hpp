#pragma once

#include <algorithm>
#include <array>
#include <string_view>

#include "spinlift/bivector.hpp"
#include "spinlift/clifford.hpp"
#include "spinlift/oracle.hpp"
#include "spinlift/spin.hpp"

namespace spinlift {

/// Below this angle sin(x)/x and sinh(x)/x switch to a three-term Taylor
/// expansion.
inline constexpr double kSincTaylorThreshold = 1e-4;

/// exp_spin treats sigma(L) as the image of a simple bivector only when
/// |S^2 + 1/4 tr2(L) I|_max <= this times max(1, |S|_max^2).
inline constexpr double kSimpleSquareTolerance = 1e-12;

/// sin(x) / x, with the removable singularity at 0.
double sin_over(double x);
/// sinh(x) / x, with the removable singularity at 0.
double sinh_over(double x);

enum class ExpBranch {
  kSimpleTrig,        // tr2 L > 0
  kSimpleHyperbolic,  // tr2 L < 0
  kSimpleNull,        // tr2 L = 0
  kNonsimplePolynomial,
  kSeriesFallback,  // neither closed form is reliable
};

std::string_view to_string(ExpBranch b);

/// exp(sigma(L)) = c_bar I + s_bar sigma(L) for simple L.
struct SimpleExpCoefficients {
  double c_bar = 1.0;
  double s_bar = 1.0;
};

SimpleExpCoefficients simple_exp_coefficients(double tr2l);

/// Coefficients of the nonsimple exponential. theta_+- = 1/2 sqrt(-+tr2 L+-),
/// i.e. theta_+ = 1/2 sqrt(mu_+) pairs with cosh/sinh and
/// theta_- = 1/2 sqrt(-mu_-) with cos/sin.
struct ExpCoefficients {
  double theta_plus = 0.0;
  double theta_minus = 0.0;
  double c_bar_plus = 1.0;   // cosh theta_+
  double c_bar_minus = 1.0;  // cos theta_-
  double s_bar_plus = 1.0;   // sinh theta_+ / theta_+
  double s_bar_minus = 1.0;  // sin theta_- / theta_-
  double n = 0.0;            // 2 / (mu_+ - mu_-)
  std::array<double, 4> alpha{};  // exp(S) = sum_k alpha_k S^k
};

/// Requires mu_+ > mu_-.
ExpCoefficients exp_coefficients(const MuPair& mu);

template <class Matrix>
Matrix exp_spin_simple(const Matrix& s, double tr2l) {
  const SimpleExpCoefficients c = simple_exp_coefficients(tr2l);
  return c.c_bar * Matrix::Identity(s.rows(), s.cols()) + c.s_bar * s;
}

/// c+c- I + s+c- sigma(L+) + c+s- sigma(L-) + s+s- sigma(L+)sigma(L-).
/// Propagates Error(kSimpleInput) from the decomposition.
template <CliffordRepresentation Rep>
typename Rep::Matrix exp_spin_factored(const Bivector& l, const Rep& rep) {
  const OrthogonalDecomposition d = orthogonal_decompose(l);
  const ExpCoefficients c = exp_coefficients(d.mu);
  const typename Rep::Matrix sp = spin_rep(rep, d.plus);
  const typename Rep::Matrix sm = spin_rep(rep, d.minus);
  return c.c_bar_plus * c.c_bar_minus * rep.identity() + c.s_bar_plus * c.c_bar_minus * sp +
         c.c_bar_plus * c.s_bar_minus * sm + c.s_bar_plus * c.s_bar_minus * (sp * sm);
}

/// alpha_0 I + alpha_1 S + alpha_2 S^2 + alpha_3 S^3 with S = sigma(L).
/// Throws Error(kSimpleInput) for simple L.
template <CliffordRepresentation Rep>
typename Rep::Matrix exp_spin_polynomial(const Bivector& l, const Rep& rep) {
  const MuPair mu = mu_roots(l);
  const double n = l.norm();
  if (is_simple(l) || mu.gap() <= kDecompositionGapTolerance * std::max(1.0, n * n)) {
    throw Error(ErrorCode::kSimpleInput, "exp_spin_polynomial requires a nonsimple bivector");
  }
  const ExpCoefficients c = exp_coefficients(mu);
  const typename Rep::Matrix s = spin_rep(rep, l);
  const typename Rep::Matrix s2 = s * s;
  return c.alpha[0] * rep.identity() + c.alpha[1] * s + c.alpha[2] * s2 + c.alpha[3] * (s2 * s);
}

template <CliffordRepresentation Rep>
struct ExpSpinResult {
  typename Rep::Matrix value;
  ExpBranch branch;
  /// Set when the input sits between the simple and nonsimple regimes and
  /// the series oracle was used.
  bool near_degenerate = false;
};

/// Routes simple inputs to exp_spin_simple and nonsimple ones to
/// exp_spin_polynomial. Inputs that pass neither regime's check fall back
/// to the series exponential.
template <CliffordRepresentation Rep>
ExpSpinResult<Rep> exp_spin(const Bivector& l, const Rep& rep) {
  using Matrix = typename Rep::Matrix;
  const double n = l.norm();
  const double scale2 = std::max(1.0, n * n);
  const MuPair mu = mu_roots(l);
  const Matrix s = spin_rep(rep, l);

  if (!is_simple(l) && mu.gap() > kDecompositionGapTolerance * scale2) {
    return {exp_spin_polynomial(l, rep), ExpBranch::kNonsimplePolynomial, false};
  }
  const double t = tr2(l);
  if (is_simple(l)) {
    const double residual = (s * s + 0.25 * t * rep.identity()).cwiseAbs().maxCoeff();
    const double s_norm = s.cwiseAbs().maxCoeff();
    if (residual <= kSimpleSquareTolerance * std::max(1.0, s_norm * s_norm)) {
      ExpBranch branch = ExpBranch::kSimpleNull;
      if (t > kSimpleSquareTolerance * scale2) branch = ExpBranch::kSimpleTrig;
      if (t < -kSimpleSquareTolerance * scale2) branch = ExpBranch::kSimpleHyperbolic;
      return {exp_spin_simple(s, t), branch, false};
    }
  }
  return {exp_series(s), ExpBranch::kSeriesFallback, true};
}

}  // namespace spinlift
