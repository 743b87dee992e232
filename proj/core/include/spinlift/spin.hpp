#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "spinlift/bivector.hpp"
#include "spinlift/clifford.hpp"
#include "spinlift/error.hpp"

namespace spinlift {

inline constexpr double kSpinGapTolerance = 1e-8;

namespace detail {

inline double real_part(double x) { return x; }
inline double real_part(const std::complex<double>& x) { return x.real(); }

}  // namespace detail

/// sigma(L+-) recovered from powers of S = sigma(L) alone:
///   S+- = +-2/(mu+ - mu-) { 1/4 (mu-+ + 3 mu+-) S - S^3 }.
/// Throws Error(kSimpleInput) when mu+ - mu- <= 1e-8.
template <class Matrix>
std::pair<Matrix, Matrix> spin_decompose(const Matrix& s, const MuPair& mu) {
  if (mu.gap() <= kSpinGapTolerance) {
    throw Error(ErrorCode::kSimpleInput,
                "spin_decompose: mu+ - mu- = " + std::to_string(mu.gap()) + " is below threshold");
  }
  const Matrix cube = s * s * s;
  const double n = 2.0 / mu.gap();
  Matrix plus = n * (0.25 * (mu.mu_minus + 3.0 * mu.mu_plus) * s - cube);
  Matrix minus = -n * (0.25 * (mu.mu_plus + 3.0 * mu.mu_minus) * s - cube);
  return {std::move(plus), std::move(minus)};
}

/// 1/8 tr2(L) I + 1/2 S^2: the common value of sigma(L+)sigma(L-) and
/// sigma(L-)sigma(L+).
template <CliffordRepresentation Rep>
typename Rep::Matrix spin_cross_product(const typename Rep::Matrix& s, double tr2l, const Rep& rep) {
  return 0.125 * tr2l * rep.identity() + 0.5 * (s * s);
}

struct RecoveredInvariants {
  double tr2 = 0.0;
  double det = 0.0;
};

/// tr2 L and det L from sigma(L) alone. Valid for full representations only.
template <CliffordRepresentation Rep>
RecoveredInvariants recover_invariants(const typename Rep::Matrix& s, const Rep& /*rep*/) {
  const double tr_i = Rep::identity_trace();
  const typename Rep::Matrix sq = s * s;
  const double t2 = detail::real_part(sq.trace());
  const double t4 = detail::real_part((sq * sq).trace());
  return {-4.0 * t2 / tr_i, 4.0 * t4 / tr_i - 4.0 * t2 * t2 / (tr_i * tr_i)};
}

/// |tr(sigma(L+) sigma(L-))| for a nonsimple L; vanishes in a full
/// representation. Propagates Error(kSimpleInput).
template <CliffordRepresentation Rep>
double cross_trace_check(const Rep& rep, const Bivector& l) {
  const OrthogonalDecomposition d = orthogonal_decompose(l);
  return std::abs(typename Rep::Scalar((spin_rep(rep, d.plus) * spin_rep(rep, d.minus)).trace()));
}

/// |tr rho(abuv) - tr I {g(a,b)g(u,v) - g(a,u)g(b,v) + g(a,v)g(b,u)}|.
template <CliffordRepresentation Rep>
double quad_trace_identity_check(const Rep& rep, const Vec4& a, const Vec4& b, const Vec4& u,
                                 const Vec4& v) {
  const Metric& g = rep.metric();
  const auto lhs = (rep.rho(a) * rep.rho(b) * rep.rho(u) * rep.rho(v)).trace();
  const double rhs = Rep::identity_trace() *
                     (inner(g, a, b) * inner(g, u, v) - inner(g, a, u) * inner(g, b, v) +
                      inner(g, a, v) * inner(g, b, u));
  return std::abs(typename Rep::Scalar(lhs) - typename Rep::Scalar(rhs));
}

/// g(a,v)g(b,u) - g(a,u)g(b,v) for L+ = a ^ b, L- = u ^ v, factored with
/// simple_factors. Zero for an orthogonal decomposition.
double orthogonality_defect(const OrthogonalDecomposition& d);

}  // namespace spinlift
