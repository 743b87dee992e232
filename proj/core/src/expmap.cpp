#include "spinlift/expmap.hpp"

#include <cmath>

namespace spinlift {

double sin_over(double x) {
  if (std::abs(x) < kSincTaylorThreshold) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double sinh_over(double x) {
  if (std::abs(x) < kSincTaylorThreshold) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

std::string_view to_string(ExpBranch b) {
  switch (b) {
    case ExpBranch::kSimpleTrig: return "simple/trig";
    case ExpBranch::kSimpleHyperbolic: return "simple/hyperbolic";
    case ExpBranch::kSimpleNull: return "simple/null";
    case ExpBranch::kNonsimplePolynomial: return "nonsimple/polynomial";
    case ExpBranch::kSeriesFallback: return "series/near-degenerate";
  }
  return "unknown";
}

SimpleExpCoefficients simple_exp_coefficients(double tr2l) {
  if (tr2l > 0.0) {
    const double theta = 0.5 * std::sqrt(tr2l);
    return {std::cos(theta), sin_over(theta)};
  }
  if (tr2l < 0.0) {
    const double theta = 0.5 * std::sqrt(-tr2l);
    return {std::cosh(theta), sinh_over(theta)};
  }
  return {1.0, 1.0};
}

ExpCoefficients exp_coefficients(const MuPair& mu) {
  ExpCoefficients c;
  c.theta_plus = 0.5 * std::sqrt(std::max(mu.mu_plus, 0.0));
  c.theta_minus = 0.5 * std::sqrt(std::max(-mu.mu_minus, 0.0));
  c.c_bar_plus = std::cosh(c.theta_plus);
  c.c_bar_minus = std::cos(c.theta_minus);
  c.s_bar_plus = sinh_over(c.theta_plus);
  c.s_bar_minus = sin_over(c.theta_minus);
  c.n = 2.0 / mu.gap();

  const double cp = c.c_bar_plus, cm = c.c_bar_minus;
  const double sp = c.s_bar_plus, sm = c.s_bar_minus;
  const double mp = mu.mu_plus, mm = mu.mu_minus;
  c.alpha[0] = cp * cm - 0.125 * (mp + mm) * sp * sm;
  c.alpha[1] = 0.25 * c.n * ((mm + 3.0 * mp) * sp * cm - (mp + 3.0 * mm) * cp * sm);
  c.alpha[2] = 0.5 * sp * sm;
  c.alpha[3] = c.n * (cp * sm - sp * cm);
  return c;
}

}  // namespace spinlift
