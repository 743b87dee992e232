#include <gtest/gtest.h>

#include "support.hpp"

namespace spinlift {
namespace {

using testing::e;
using testing::max_entry;

CliffordElement random_element(Sampler& s) {
  CliffordElement x;
  for (BladeMask m = 0; m < kBladeCount; ++m) x[m] = s.uniform(-1, 1);
  return x;
}

TEST(CliffordMul, GeneratorRelations) {
  const Metric g;
  const auto e0 = CliffordElement::vector(e(0));
  const auto e1 = CliffordElement::vector(e(1));
  EXPECT_EQ(clifford_mul(e0, e0, g), CliffordElement::scalar(1.0));
  EXPECT_EQ(clifford_mul(e1, e1, g), CliffordElement::scalar(-1.0));
  EXPECT_EQ(clifford_mul(e0, e1, g), CliffordElement::blade(0b0011u, 1.0));
  EXPECT_EQ(clifford_mul(e1, e0, g), CliffordElement::blade(0b0011u, -1.0));
}

TEST(CliffordMul, VectorAnticommutator) {
  Sampler s(41);
  for (const Signature sig : {Signature::kPlusMinus, Signature::kMinusPlus}) {
    const Metric g = make_metric(sig);
    for (int i = 0; i < 100; ++i) {
      const Vec4 u = s.vector(), v = s.vector();
      const auto cu = CliffordElement::vector(u), cv = CliffordElement::vector(v);
      const CliffordElement sum = clifford_mul(cu, cv, g) + clifford_mul(cv, cu, g);
      EXPECT_NEAR(sum[0u], 2.0 * inner(g, u, v), 1e-14);
      for (BladeMask m = 1; m < kBladeCount; ++m) EXPECT_NEAR(sum[m], 0.0, 1e-14);
    }
  }
}

TEST(CliffordMul, Associative) {
  Sampler s(42);
  const Metric g;
  for (BladeMask a = 0; a < kBladeCount; ++a) {
    for (BladeMask b = 0; b < kBladeCount; ++b) {
      for (BladeMask c = 0; c < kBladeCount; ++c) {
        const auto x = CliffordElement::blade(a), y = CliffordElement::blade(b), z = CliffordElement::blade(c);
        EXPECT_EQ(clifford_mul(clifford_mul(x, y, g), z, g), clifford_mul(x, clifford_mul(y, z, g), g));
      }
    }
  }
  for (int i = 0; i < 50; ++i) {
    const auto x = random_element(s), y = random_element(s), z = random_element(s);
    const auto lhs = clifford_mul(clifford_mul(x, y, g), z, g);
    const auto rhs = clifford_mul(x, clifford_mul(y, z, g), g);
    for (BladeMask m = 0; m < kBladeCount; ++m) EXPECT_NEAR(lhs[m], rhs[m], 1e-13);
  }
}

TEST(CliffordMul, RejectsNonDiagonalMetric) {
  Mat4 m = Mat4::Zero();
  m(0, 1) = m(1, 0) = 1.0;
  m(2, 2) = m(3, 3) = 1.0;
  const Metric g = Metric::from_matrix(m);
  try {
    clifford_mul(CliffordElement::scalar(1), CliffordElement::scalar(1), g);
    FAIL() << "non-diagonal metric accepted";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNonDiagonalMetric);
  }
  EXPECT_THROW(RegularRep{g}, Error);
  EXPECT_THROW(GammaRep{g}, Error);
}

TEST(RegularRep, IdentityAndGenerator) {
  const Metric g;
  EXPECT_EQ(regular_rep(CliffordElement::scalar(1.0), g), (RegularRep::Matrix::Identity()));
  const RegularRep::Matrix r0 = regular_rep(CliffordElement::vector(e(0)), g);
  for (BladeMask m = 0; m < kBladeCount; ++m) {
    const BladeProduct p = blade_product(0b0001u, m, g);
    for (BladeMask row = 0; row < kBladeCount; ++row) {
      EXPECT_EQ(r0(row, m), row == p.mask ? p.sign : 0.0);
    }
  }
  EXPECT_EQ(r0 * r0, (RegularRep::Matrix::Identity()));
}

TEST(RegularRep, Multiplicative) {
  Sampler s(43);
  for (const Signature sig : {Signature::kPlusMinus, Signature::kMinusPlus}) {
    const Metric g = make_metric(sig);
    for (int i = 0; i < 100; ++i) {
      const auto x = random_element(s), y = random_element(s);
      EXPECT_LE(max_entry(regular_rep(clifford_mul(x, y, g), g) - regular_rep(x, g) * regular_rep(y, g)), 1e-12);
    }
  }
}

TEST(GammaRep, DiracBasis) {
  const Metric g;
  Eigen::Matrix4cd g0 = Eigen::Matrix4cd::Zero();
  g0.diagonal() << 1, 1, -1, -1;
  EXPECT_EQ(gamma_rep(e(0), g), g0);
  const Eigen::Matrix4cd g1 = gamma_rep(e(1), g);
  EXPECT_LE(max_entry(g1 * g1 + Eigen::Matrix4cd::Identity()), 0.0);
  EXPECT_LE(max_entry(g0 * g1 + g1 * g0), 0.0);
}

TEST(GammaRep, MinusPlusUsesImaginaryUnit) {
  const Metric g = make_metric(Signature::kMinusPlus);
  const Metric h;
  for (int a = 0; a < 4; ++a) {
    EXPECT_LE(max_entry(gamma_rep(e(a), g) - std::complex<double>(0, 1) * gamma_rep(e(a), h)), 0.0);
  }
}

template <class Rep>
void expect_clifford_relation(const Metric& g) {
  const Rep rep(g);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto lhs = rep.generator(a) * rep.generator(b) + rep.generator(b) * rep.generator(a);
      EXPECT_LE(max_entry(lhs - 2.0 * g(a, b) * rep.identity()), 1e-12) << a << "," << b;
    }
  }
}

TEST(Representations, CliffordRelation) {
  for (const Signature sig : {Signature::kPlusMinus, Signature::kMinusPlus}) {
    expect_clifford_relation<RegularRep>(make_metric(sig));
    expect_clifford_relation<GammaRep>(make_metric(sig));
  }
  EXPECT_EQ(RegularRep::identity_trace(), 16.0);
  EXPECT_EQ(GammaRep::identity_trace(), 4.0);
}

TEST(SpinRep, Examples) {
  const Metric g;
  const GammaRep rep(g);
  const Bivector l = wedge(g, e(0), e(1));
  const Eigen::Matrix4cd sigma = spin_rep(rep, l);
  EXPECT_LE(max_entry(sigma - 0.5 * rep.generator(0) * rep.generator(1)), 1e-15);
  EXPECT_LE(max_entry(sigma * sigma - 0.25 * rep.identity()), 1e-15);
  EXPECT_EQ(max_entry(spin_rep(rep, Bivector::zero(g))), 0.0);
}

template <class Rep>
void expect_spin_properties(const Metric& g, std::uint64_t seed) {
  const Rep rep(g);
  Sampler s(seed);
  for (int i = 0; i < 200; ++i) {
    const Vec4 u = s.vector(), v = s.vector(), w = s.vector();
    const Bivector simple = wedge(g, u, v);
    const auto sigma = spin_rep(rep, simple);
    const auto ru = rep.rho(u), rv = rep.rho(v);
    EXPECT_LE(max_entry(sigma - 0.25 * (ru * rv - rv * ru)), 1e-12);
    EXPECT_LE(max_entry(sigma * sigma + 0.25 * tr2(simple) * rep.identity()), 1e-10);

    const Bivector l1 = s.bivector(g), l2 = s.bivector(g);
    const double a = s.uniform(-2, 2), b = s.uniform(-2, 2);
    EXPECT_LE(max_entry(spin_rep(rep, a * l1 + b * l2) - (a * spin_rep(rep, l1) + b * spin_rep(rep, l2))), 1e-12);
    EXPECT_LE(lie_bracket_check(rep, l1, l2), 1e-10 * std::max(1.0, l1.norm() * l2.norm()));

    const auto s1 = spin_rep(rep, l1);
    const auto rw = rep.rho(w);
    EXPECT_LE(max_entry((s1 * rw - rw * s1) - rep.rho(Vec4(l1.matrix() * w))), 1e-10);
  }
  const Bivector b01 = wedge(g, e(0), e(1)), b12 = wedge(g, e(1), e(2));
  EXPECT_LE(lie_bracket_check(rep, b01, b12), 1e-10);
  EXPECT_EQ(lie_bracket_check(rep, b01, b01), 0.0);
}

TEST(SpinRep, PropertiesBothRepresentations) {
  for (const Signature sig : {Signature::kPlusMinus, Signature::kMinusPlus}) {
    expect_spin_properties<GammaRep>(make_metric(sig), 44);
    expect_spin_properties<RegularRep>(make_metric(sig), 45);
  }
}

TEST(RepKind, Names) {
  EXPECT_EQ(to_string(RepKind::kGamma), "gamma");
  EXPECT_EQ(to_string(RepKind::kRegular), "regular");
}

}  // namespace
}  // namespace spinlift
