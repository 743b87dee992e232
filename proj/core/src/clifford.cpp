#include "spinlift/clifford.hpp"

#include <bit>

#include "spinlift/error.hpp"

namespace spinlift {

namespace {

void require_diagonal_unit(const Metric& g, const char* who) {
  if (!g.is_diagonal_unit()) {
    throw Error(ErrorCode::kNonDiagonalMetric,
                std::string(who) + " requires a diagonal metric with entries +-1");
  }
}

}  // namespace

BladeProduct blade_product(BladeMask a, BladeMask b, const Metric& g) {
  // Moving each generator of b leftwards past the generators of a that are
  // larger than it costs one transposition each.
  int swaps = 0;
  for (BladeMask rest = a >> 1; rest != 0; rest >>= 1) {
    swaps += std::popcount(rest & b);
  }
  double sign = (swaps % 2 == 0) ? 1.0 : -1.0;
  const BladeMask common = a & b;
  for (int i = 0; i < 4; ++i) {
    if (common & (1u << i)) sign *= g(i, i);
  }
  return {a ^ b, sign};
}

CliffordElement CliffordElement::blade(BladeMask mask, double coeff) {
  CliffordElement x;
  x.coeffs_[mask] = coeff;
  return x;
}

CliffordElement CliffordElement::vector(const Vec4& u) {
  CliffordElement x;
  for (int i = 0; i < 4; ++i) x.coeffs_[1u << i] = u[i];
  return x;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  for (int i = 0; i < kBladeCount; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  for (int i = 0; i < kBladeCount; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b, const Metric& g) {
  require_diagonal_unit(g, "clifford_mul");
  CliffordElement out;
  for (BladeMask s = 0; s < kBladeCount; ++s) {
    if (a[s] == 0.0) continue;
    for (BladeMask t = 0; t < kBladeCount; ++t) {
      if (b[t] == 0.0) continue;
      const BladeProduct p = blade_product(s, t, g);
      out[p.mask] += p.sign * a[s] * b[t];
    }
  }
  return out;
}

std::string_view to_string(RepKind kind) {
  return kind == RepKind::kRegular ? "regular" : "gamma";
}

RegularRep::RegularRep(const Metric& g) : metric_(g) {
  require_diagonal_unit(g, "RegularRep");
  for (BladeMask s = 0; s < kBladeCount; ++s) {
    Matrix m = Matrix::Zero();
    for (BladeMask t = 0; t < kBladeCount; ++t) {
      const BladeProduct p = blade_product(s, t, g);
      m(p.mask, t) = p.sign;
    }
    blades_[s] = m;
  }
  for (int a = 0; a < 4; ++a) generators_[a] = blades_[1u << a];
  build_spin_generators();
}

RegularRep::Matrix RegularRep::rho(const CliffordElement& x) const {
  Matrix out = Matrix::Zero();
  for (BladeMask s = 0; s < kBladeCount; ++s) {
    if (x[s] != 0.0) out += x[s] * blades_[s];
  }
  return out;
}

GammaRep::GammaRep(const Metric& g) : metric_(g) {
  if (g.signature() != Signature::kPlusMinus && g.signature() != Signature::kMinusPlus) {
    throw Error(ErrorCode::kNonDiagonalMetric,
                "GammaRep supports only the pmmm and mppp signatures");
  }
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  Eigen::Matrix2cd pauli[3];
  pauli[0] << 0, 1, 1, 0;
  pauli[1] << 0, -i, i, 0;
  pauli[2] << 1, 0, 0, -1;

  Matrix g0 = Matrix::Zero();
  g0.diagonal() << 1, 1, -1, -1;
  generators_[0] = g0;
  for (int k = 0; k < 3; ++k) {
    Matrix gk = Matrix::Zero();
    gk.topRightCorner<2, 2>() = pauli[k];
    gk.bottomLeftCorner<2, 2>() = -pauli[k];
    generators_[k + 1] = gk;
  }
  if (g.signature() == Signature::kMinusPlus) {
    for (auto& m : generators_) m *= i;
  }
  build_spin_generators();
}

RegularRep::Matrix regular_rep(const CliffordElement& x, const Metric& g) {
  return RegularRep(g).rho(x);
}

Eigen::Matrix4cd gamma_rep(const Vec4& u, const Metric& g) { return GammaRep(g).rho(u); }

}  // namespace spinlift
