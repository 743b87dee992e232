#pragma once

#include <array>
#include <complex>
#include <concepts>
#include <string_view>

#include <Eigen/Core>

#include "spinlift/bivector.hpp"
#include "spinlift/metric.hpp"

namespace spinlift {

//===----------------------------------------------------------------------===//
// Clifford algebra Cl(g) on the subset basis
//===----------------------------------------------------------------------===//

/// Blades are indexed by bitmask: bit i set means generator e_i is a
/// factor, taken in ascending order. Mask 0 is the scalar 1.
using BladeMask = unsigned;
inline constexpr int kBladeCount = 16;

/// e_S e_T = sign * e_{S xor T}.
struct BladeProduct {
  BladeMask mask;
  double sign;
};

/// Requires a diagonal unit metric (not checked here; see clifford_mul).
BladeProduct blade_product(BladeMask a, BladeMask b, const Metric& g);

class CliffordElement {
 public:
  CliffordElement() { coeffs_.fill(0.0); }

  static CliffordElement scalar(double s) { return blade(0u, s); }
  static CliffordElement blade(BladeMask mask, double coeff = 1.0);
  /// u^a e_a (grade one).
  static CliffordElement vector(const Vec4& u);

  double operator[](BladeMask mask) const { return coeffs_[mask]; }
  double& operator[](BladeMask mask) { return coeffs_[mask]; }
  const std::array<double, kBladeCount>& coeffs() const { return coeffs_; }

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement operator+(const CliffordElement& o) const { return CliffordElement(*this) += o; }
  CliffordElement operator-(const CliffordElement& o) const { return CliffordElement(*this) -= o; }
  friend CliffordElement operator*(double s, CliffordElement x) {
    for (double& c : x.coeffs_) c *= s;
    return x;
  }

  bool operator==(const CliffordElement&) const = default;

 private:
  std::array<double, kBladeCount> coeffs_;
};

/// Geometric product over a diagonal +-1 metric. Throws
/// Error(kNonDiagonalMetric) for any other metric.
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b, const Metric& g);

//===----------------------------------------------------------------------===//
// Representations rho : Cl(g) -> Hom(V, V)
//===----------------------------------------------------------------------===//

enum class RepKind { kRegular, kGamma };

std::string_view to_string(RepKind kind);

namespace detail {

/// Generator tables shared by both representations: rho(e_a) and the six
/// spin generators 1/4 rho(e_a e_b - e_b e_a), a < b.
template <class MatrixT>
class RepTables {
 public:
  using Matrix = MatrixT;

  const Matrix& generator(int a) const { return generators_[a]; }
  const Matrix& spin_generator(int a, int b) const { return spin_generators_[pair_index(a, b)]; }

  /// rho(u) = u^a rho(e_a).
  Matrix rho(const Vec4& u) const {
    Matrix out = Matrix::Zero();
    for (int a = 0; a < 4; ++a) out += u[a] * generators_[a];
    return out;
  }

  static Matrix identity() { return Matrix::Identity(); }

 protected:
  void build_spin_generators() {
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        spin_generators_[pair_index(a, b)] =
            0.25 * (generators_[a] * generators_[b] - generators_[b] * generators_[a]);
      }
    }
  }

  static constexpr int pair_index(int a, int b) {
    // (0,1)->0 (0,2)->1 (0,3)->2 (1,2)->3 (1,3)->4 (2,3)->5
    return a == 0 ? b - 1 : (a == 1 ? b + 1 : 5);
  }

  std::array<Matrix, 4> generators_;
  std::array<Matrix, 6> spin_generators_;
};

}  // namespace detail

/// Cl(g) acting on itself by left multiplication: 16-dimensional, real,
/// reducible. Columns are indexed by blade mask.
class RegularRep : public detail::RepTables<Eigen::Matrix<double, 16, 16>> {
 public:
  using Scalar = double;
  static constexpr RepKind kind = RepKind::kRegular;
  static constexpr int dim = 16;

  /// Throws Error(kNonDiagonalMetric) unless g is diagonal +-1.
  explicit RegularRep(const Metric& g = Metric());

  const Metric& metric() const { return metric_; }
  static constexpr double identity_trace() { return dim; }

  using RepTables::rho;
  /// Left multiplication by an arbitrary element.
  Matrix rho(const CliffordElement& x) const;

 private:
  Metric metric_;
  std::array<Matrix, kBladeCount> blades_;
};

/// 4x4 complex gamma matrices in the Dirac basis; for (-,+,+,+) every
/// gamma is multiplied by the imaginary unit.
class GammaRep : public detail::RepTables<Eigen::Matrix4cd> {
 public:
  using Scalar = std::complex<double>;
  static constexpr RepKind kind = RepKind::kGamma;
  static constexpr int dim = 4;

  /// Throws Error(kNonDiagonalMetric) unless g is pmmm or mppp.
  explicit GammaRep(const Metric& g = Metric());

  const Metric& metric() const { return metric_; }
  static constexpr double identity_trace() { return dim; }

 private:
  Metric metric_;
};

template <class R>
concept CliffordRepresentation = requires(const R& rep, const Vec4& u, int a) {
  typename R::Scalar;
  typename R::Matrix;
  { R::kind } -> std::convertible_to<RepKind>;
  { R::dim } -> std::convertible_to<int>;
  { rep.metric() } -> std::convertible_to<const Metric&>;
  { rep.identity() } -> std::same_as<typename R::Matrix>;
  { rep.rho(u) } -> std::same_as<typename R::Matrix>;
  { rep.generator(a) } -> std::convertible_to<const typename R::Matrix&>;
  { R::identity_trace() } -> std::convertible_to<double>;
};

/// Free-function forms of the two representations.
RegularRep::Matrix regular_rep(const CliffordElement& x, const Metric& g = Metric());
Eigen::Matrix4cd gamma_rep(const Vec4& u, const Metric& g = Metric());

//===----------------------------------------------------------------------===//
// Spin representation sigma : so(g) -> Hom(V, V)
//===----------------------------------------------------------------------===//

/// sigma(L) = sum_{a<b} F^{ab} 1/4 rho(e_a e_b - e_b e_a) with F = L g^{-1},
/// so that sigma(u ^ v) = 1/4 rho(uv - vu).
template <CliffordRepresentation Rep>
typename Rep::Matrix spin_rep(const Rep& rep, const Bivector& l) {
  const Mat4 f = l.coefficients();
  typename Rep::Matrix out = Rep::Matrix::Zero();
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (f(a, b) != 0.0) out += f(a, b) * rep.spin_generator(a, b);
    }
  }
  return out;
}

/// |sigma([L1, L2]) - [sigma(L1), sigma(L2)]|_max.
template <CliffordRepresentation Rep>
double lie_bracket_check(const Rep& rep, const Bivector& l1, const Bivector& l2) {
  const auto s1 = spin_rep(rep, l1);
  const auto s2 = spin_rep(rep, l2);
  const auto lhs = spin_rep(rep, l1.commutator(l2));
  return (lhs - (s1 * s2 - s2 * s1)).cwiseAbs().maxCoeff();
}

}  // namespace spinlift
