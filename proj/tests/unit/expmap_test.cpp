#include <cmath>

#include <gtest/gtest.h>

#include "support.hpp"

namespace spinlift {
namespace {

using testing::e;
using testing::max_entry;

TEST(SincFunctions, MatchLongDoubleReference) {
  for (double x : {1e-12, 1e-8, 3e-5, 9.9e-5, 1e-4, 1.01e-4, 1e-3, 0.1, 1.0, 3.0}) {
    const long double lx = x;
    const double sin_ref = static_cast<double>(std::sin(lx) / lx);
    const double sinh_ref = static_cast<double>(std::sinh(lx) / lx);
    EXPECT_NEAR(sin_over(x), sin_ref, 1e-12 * sin_ref) << x;
    EXPECT_NEAR(sinh_over(x), sinh_ref, 1e-12 * sinh_ref) << x;
  }
  EXPECT_EQ(sin_over(0.0), 1.0);
  EXPECT_EQ(sinh_over(0.0), 1.0);
}

TEST(SincFunctions, TaylorBranchCurvatureSign) {
  const double t = 1e-5;
  EXPECT_NEAR(sinh_over(t) - 1.0, t * t / 6.0, 3e-16);
  EXPECT_NEAR(sin_over(t) - 1.0, -t * t / 6.0, 3e-16);
}

TEST(ExpSpinSimple, Examples) {
  const Metric g;
  const GammaRep rep(g);
  const Bivector boost = wedge(g, e(0), e(1));
  const Eigen::Matrix4cd expected =
      std::cosh(0.5) * rep.identity() + std::sinh(0.5) * rep.generator(0) * rep.generator(1);
  EXPECT_LE(max_entry(exp_spin_simple(spin_rep(rep, boost), tr2(boost)) - expected), 1e-15);
  EXPECT_LE(max_entry(exp_series(spin_rep(rep, boost)) - expected), 1e-15);

  const Bivector rot = wedge(g, e(2), e(3));
  const Eigen::Matrix4cd s = spin_rep(rep, rot);
  const Eigen::Matrix4cd rot_expected = std::cos(0.5) * rep.identity() + 2.0 * std::sin(0.5) * s;
  EXPECT_LE(max_entry(exp_spin_simple(s, tr2(rot)) - rot_expected), 1e-15);
  EXPECT_LE(max_entry(exp_series(s) - rot_expected), 1e-15);

  EXPECT_EQ(exp_spin_simple(Eigen::Matrix4cd(Eigen::Matrix4cd::Zero()), 0.0), rep.identity());
}

TEST(ExpCoefficients, BlockExample) {
  const ExpCoefficients c = exp_coefficients(MuPair{1.0, -1.0});
  EXPECT_DOUBLE_EQ(c.theta_plus, 0.5);
  EXPECT_DOUBLE_EQ(c.theta_minus, 0.5);
  EXPECT_DOUBLE_EQ(c.n, 1.0);
  EXPECT_NEAR(c.alpha[2], 0.5 * (std::sinh(0.5) / 0.5) * (std::sin(0.5) / 0.5), 1e-15);
}

TEST(ExpCoefficients, AlphaTwoFromParts) {
  Sampler s(61);
  const Metric g;
  for (int i = 0; i < 200; ++i) {
    const ExpCoefficients c = exp_coefficients(mu_roots(s.bivector(g, 2.0)));
    EXPECT_NEAR(c.alpha[2], 0.5 * c.s_bar_plus * c.s_bar_minus, 1e-12);
    EXPECT_GE(c.theta_plus, 0.0);
    EXPECT_GE(c.theta_minus, 0.0);
  }
}

template <class Rep>
class ExpmapTest : public ::testing::Test {};

using Reps = ::testing::Types<GammaRep, RegularRep>;
TYPED_TEST_SUITE(ExpmapTest, Reps);

TYPED_TEST(ExpmapTest, BlockExampleMatchesSeries) {
  const Metric g;
  const TypeParam rep(g);
  const Bivector l = wedge(g, e(0), e(1)) + wedge(g, e(2), e(3));
  const auto series = exp_series(spin_rep(rep, l));
  const auto factored = exp_spin_factored(l, rep);
  EXPECT_LE(max_entry(factored - series), 1e-10);
  EXPECT_LE(max_entry(exp_spin_polynomial(l, rep) - factored), 1e-11);
  EXPECT_THROW(exp_spin_factored(0.0 * l, rep), Error);
  EXPECT_THROW(exp_spin_polynomial(wedge(g, e(0), e(1)), rep), Error);
}

TYPED_TEST(ExpmapTest, ThreeWayAgreement) {
  for (const Signature sig : {Signature::kPlusMinus, Signature::kMinusPlus}) {
    const Metric g = make_metric(sig);
    const TypeParam rep(g);
    Sampler s(62);
    for (int i = 0; i < 500; ++i) {
      const Bivector l = s.bivector(g, 1.5);
      const auto series = exp_series(spin_rep(rep, l));
      const auto factored = exp_spin_factored(l, rep);
      const auto polynomial = exp_spin_polynomial(l, rep);
      const double n = max_entry(series);
      EXPECT_LE(max_entry(factored - polynomial), 1e-10 * n);
      EXPECT_LE(max_entry(factored - series), 1e-9 * n);
      EXPECT_LE(max_entry(polynomial - series), 1e-9 * n);
    }
  }
}

TYPED_TEST(ExpmapTest, SimpleFormulaAllSignRegimes) {
  const Metric g;
  const TypeParam rep(g);
  Sampler s(63);
  int trig = 0, hyperbolic = 0;
  for (int i = 0; i < 500; ++i) {
    const Bivector l = s.simple_bivector(g);
    (tr2(l) > 0 ? trig : hyperbolic)++;
    const auto sigma = spin_rep(rep, l);
    EXPECT_LE(max_entry(exp_spin_simple(sigma, tr2(l)) - exp_series(sigma)), 1e-10);
  }
  EXPECT_GT(trig, 0);
  EXPECT_GT(hyperbolic, 0);
  for (double t : {0.1, 1.0, 3.0}) {
    const Bivector null = testing::null_rotation(g, t);
    ASSERT_EQ(tr2(null), 0.0);
    const auto sigma = spin_rep(rep, null);
    EXPECT_LE(max_entry(exp_spin_simple(sigma, 0.0) - exp_series(sigma)), 1e-10);
  }
}

TYPED_TEST(ExpmapTest, GroupIntertwining) {
  const Metric g;
  const TypeParam rep(g);
  Sampler s(64);
  for (int i = 0; i < 200; ++i) {
    const Bivector l = s.bivector(g);
    const auto sigma = exp_spin(l, rep).value;
    EXPECT_LE(intertwining_defect(sigma, exp_series(l.matrix()), rep), 1e-8);
  }
}

TYPED_TEST(ExpmapTest, CommutingPartsMultiply) {
  const Metric g;
  const TypeParam rep(g);
  Sampler s(65);
  for (int i = 0; i < 200; ++i) {
    const Bivector l = s.bivector(g);
    const OrthogonalDecomposition d = orthogonal_decompose(l);
    const typename TypeParam::Matrix product =
        exp_spin_simple(spin_rep(rep, d.plus), tr2(d.plus)) * exp_spin_simple(spin_rep(rep, d.minus), tr2(d.minus));
    EXPECT_LE(max_entry(exp_spin(l, rep).value - product), 1e-10);
  }
}

TYPED_TEST(ExpmapTest, DispatcherBranches) {
  const Metric g;
  const TypeParam rep(g);
  EXPECT_EQ(exp_spin(wedge(g, e(2), e(3)), rep).branch, ExpBranch::kSimpleTrig);
  EXPECT_EQ(exp_spin(wedge(g, e(0), e(1)), rep).branch, ExpBranch::kSimpleHyperbolic);
  EXPECT_EQ(exp_spin(testing::null_rotation(g), rep).branch, ExpBranch::kSimpleNull);
  EXPECT_EQ(exp_spin(Bivector::zero(g), rep).value, rep.identity());

  const Bivector nonsimple = wedge(g, e(0), e(1)) + wedge(g, e(2), e(3));
  const auto r = exp_spin(nonsimple, rep);
  EXPECT_EQ(r.branch, ExpBranch::kNonsimplePolynomial);
  EXPECT_FALSE(r.near_degenerate);
  EXPECT_EQ(r.value, exp_spin_polynomial(nonsimple, rep));

  const Bivector simple = wedge(g, e(0) + 0.3 * e(2), e(1) - 0.7 * e(3));
  EXPECT_EQ(exp_spin(simple, rep).value, exp_spin_simple(spin_rep(rep, simple), tr2(simple)));
}

TYPED_TEST(ExpmapTest, NearDegenerateFallsBackToSeries) {
  // A null rotation perturbed off its plane: mu_+ - mu_- is of order 1e-10
  // but sigma(L)^2 is not a multiple of the identity.
  const Metric g;
  const TypeParam rep(g);
  const Bivector l = testing::null_rotation(g) + 1e-10 * wedge(g, e(0), e(2));
  const MuPair mu = mu_roots(l);
  EXPECT_LT(mu.gap(), 1e-8);
  EXPECT_GT(mu.gap(), 0.0);
  const auto r = exp_spin(l, rep);
  EXPECT_EQ(r.branch, ExpBranch::kSeriesFallback);
  EXPECT_TRUE(r.near_degenerate);
  EXPECT_LE(max_entry(r.value - exp_series(spin_rep(rep, l))), 1e-15);
}

TEST(ExpBranch, Names) {
  EXPECT_EQ(to_string(ExpBranch::kSimpleTrig), "simple/trig");
  EXPECT_EQ(to_string(ExpBranch::kNonsimplePolynomial), "nonsimple/polynomial");
  EXPECT_EQ(to_string(ExpBranch::kSeriesFallback), "series/near-degenerate");
}

TEST(DoubleCover, ShiftByTwoPiFlipsSign) {
  const Metric g;
  const GammaRep rep(g);
  Sampler s(66);
  for (int i = 0; i < 50; ++i) {
    Bivector l = s.simple_bivector(g);
    if (tr2(l) <= 0.0) continue;
    const double theta = std::sqrt(tr2(l));
    const Bivector shifted = ((theta + 2.0 * std::numbers::pi) / theta) * l;
    EXPECT_LE(max_entry(exp_spin(shifted, rep).value + exp_spin(l, rep).value), 1e-9);
  }
}

}  // namespace
}  // namespace spinlift
