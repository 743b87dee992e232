#pragma once

// Brute-force references. Nothing in here calls the closed-form code paths
// of expmap or group_lift.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Core>
#include <Eigen/LU>

#include "spinlift/bivector.hpp"
#include "spinlift/clifford.hpp"
#include "spinlift/error.hpp"
#include "spinlift/lorentz_transformation.hpp"

namespace spinlift {

/// Matrix exponential by scaling and squaring: scale so |M / 2^s|_1 <= 0.5,
/// sum the Taylor series until the next term is below tol times the sum,
/// then square s times.
template <class Derived>
typename Derived::PlainObject exp_series(const Eigen::MatrixBase<Derived>& m, double tol = 1e-17) {
  using Plain = typename Derived::PlainObject;
  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Plain a = m / std::ldexp(1.0, squarings);

  Plain sum = Plain::Identity(m.rows(), m.cols());
  Plain term = sum;
  for (int k = 1; k < 64; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() <= tol * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Deterministic generator for property tests. Bivectors are sampled as
/// L = F g with F antisymmetric and entries uniform in [-scale, scale].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Vec4 vector(double scale = 1.0);
  Bivector bivector(const Metric& g, double scale = 1.0);
  /// wedge of two random vectors.
  Bivector simple_bivector(const Metric& g, double scale = 1.0);
  /// exp_series of a random bivector.
  LorentzTransformation transformation(const Metric& g, double scale = 1.0);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

Bivector random_bivector(const Metric& g, std::uint64_t seed, double scale = 1.0);
LorentzTransformation random_transformation(const Metric& g, std::uint64_t seed, double scale = 1.0);

/// max over basis vectors e_a of |Sigma rho(e_a) Sigma^{-1} - rho(Lam e_a)|_max.
/// Blind to the sign of Sigma. Throws Error(kSingularSigma).
template <CliffordRepresentation Rep>
double intertwining_defect(const typename Rep::Matrix& sigma, const Mat4& lam, const Rep& rep) {
  const Eigen::FullPivLU<typename Rep::Matrix> lu(sigma);
  if (!lu.isInvertible()) throw Error(ErrorCode::kSingularSigma, "Sigma is not invertible");
  const typename Rep::Matrix inv = lu.inverse();
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    const typename Rep::Matrix lhs = sigma * rep.generator(a) * inv;
    const typename Rep::Matrix rhs = rep.rho(Vec4(lam.col(a)));
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace spinlift
