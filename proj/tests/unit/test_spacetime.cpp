#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lieforge/rep_transfer.hpp"
#include "lieforge/spacetime.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace lieforge;
using oracle::I;

namespace {

constexpr double kAbs = 1e-12;
constexpr double kExp = 1e-10;

double vec_dist(const FourVector& a, const FourVector& b) {
  double d = 0.0;
  for (int mu = 1; mu <= 4; ++mu) d = std::max(d, std::abs(a[mu] - b[mu]));
  return d;
}

// 2x2 determinant of x^mu sigma^mu by hand.
double det_oracle(const FourVector& x) {
  const oracle::C a = x[4] + x[3], d = x[4] - x[3];
  const oracle::C b = x[1] - I * x[2], c = x[1] + I * x[2];
  return -(a * d - b * c).real();
}

oracle::Mat metric() {
  oracle::Mat g = oracle::eye(4);
  g[3][3] = -1.0;
  return g;
}

}  // namespace

TEST(D4, IdentityAtZero) { EXPECT_LT(frobenius_distance(d4({}), CMatrix::identity(4)), kExp); }

TEST(D4, PureBoostAgainstClosedForm) {
  const CMatrix d = d4({{0, 0, 0}, {1.0, 0, 0}});
  EXPECT_LT(oracle::max_abs_diff(d, oracle::boost_matrix(1, 1.0)), kExp);
}

TEST(D4, QuarterTurnAboutAxis3) {
  const CMatrix d = d4({{0, 0, std::numbers::pi / 2}, {}});
  oracle::Mat j3 = oracle::zeros(4);
  j3[0][1] = -I;
  j3[1][0] = I;
  const oracle::Mat want = oracle::series_exp(oracle::scale(j3, I * (std::numbers::pi / 2)));
  EXPECT_LT(oracle::max_abs_diff(d, want), kExp);
  EXPECT_LT(std::abs(d(2, 2) - 1.0) + std::abs(d(3, 3) - 1.0), kExp);
  EXPECT_LT(std::abs(std::abs(d(0, 1)) - 1.0), kExp);
}

TEST(Apply, Examples) {
  const FourVector x{{1.5, -2.0, 0.25, 3.0}};
  EXPECT_LT(vec_dist(apply(CMatrix::identity(4), x), x), kAbs);
  const FourVector t{{0, 0, 0, 1}};
  EXPECT_LT(vec_dist(apply(d4({{}, {1.0, 0, 0}}), t), FourVector{{std::sinh(1.0), 0, 0, std::cosh(1.0)}}), kExp);
  const FourVector axis{{0, 0, 5, 7}};
  EXPECT_LT(vec_dist(apply(d4({{0, 0, 0.7}, {}}), axis), axis), kExp);
}

TEST(Apply, Errors) {
  EXPECT_THROW(apply(CMatrix::identity(3), FourVector{}), DimError);
  EXPECT_THROW(apply(CMatrix::identity(4) * kI, FourVector{{1, 0, 0, 0}}), PurityError);
}

TEST(Interval, Examples) {
  EXPECT_EQ(interval_sq(FourVector{{1, 0, 0, 2}}), -3.0);
  EXPECT_EQ(interval_sq(FourVector{}), 0.0);
  EXPECT_EQ(interval_sq(FourVector{{3, 4, 0, 5}}), 0.0);
  EXPECT_NEAR(interval_sq_via_det(FourVector{{1, 0, 0, 2}}), -3.0, kAbs);
  EXPECT_NEAR(interval_sq_via_det(FourVector{{0, 0, 0, 1}}), -1.0, kAbs);
}

TEST(Affine, Examples) {
  const FourVector x{{1, -1, 2, 0.5}};
  EXPECT_LT(vec_dist(affine_apply(AffineTransform{}, x), x), kAbs);
  const FourVector a{{1, 2, 3, 4}};
  EXPECT_LT(vec_dist(affine_apply(AffineTransform{CMatrix::identity(4), a}, FourVector{}), a), kAbs);
  const FourVector x0{{0.3, 0.1, -2, 4}}, x1{{5, 6, 7, 8}};
  const AffineTransform shift{CMatrix::identity(4), a};
  EXPECT_LT(vec_dist(affine_apply(shift, x1) - affine_apply(shift, x0), x1 - x0), kAbs);
}

TEST(Affine, GeneratorsAndTranslation) {
  const auto g = affine_generators();
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) EXPECT_EQ(frobenius_norm(commutator(g.p5[mu], g.p5[nu])), 0.0);
  for (const auto& r : check_poincare(g.j5, g.k5, g.p5)) EXPECT_TRUE(r.passed) << r.label;
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(g.j5[i].block(0, 0, 4), build_j4()[i]);
    EXPECT_EQ(g.k5[i].block(0, 0, 4), build_k4()[i]);
  }
  const FourVector a{{0.5, -1.0, 2.0, 3.0}}, x{{1, 2, 3, 4}};
  const CMatrix e = translation_exponential(a);
  for (int row = 0; row < 4; ++row) {
    CScalar s = e(row, 4);
    for (int c = 0; c < 4; ++c) s += e(row, c) * x[c + 1];
    EXPECT_LT(std::abs(s - (x[row + 1] + a[row + 1])), kAbs);
  }
  EXPECT_LT(std::abs(e(4, 4) - 1.0), kAbs);
}

TEST(Intertwine, Examples) {
  const auto [j, k] = rep22_jk();
  const auto r0 = intertwine_check(j, k, gamma(), {});
  EXPECT_TRUE(r0.passed);
  EXPECT_LT(r0.max_residual, kAbs);
  EXPECT_TRUE(intertwine_check(j, k, gamma(), {{0.3, -0.2, 0.5}, {0.1, 0.4, -0.3}}).passed);
  const auto g = affine_generators();
  EXPECT_TRUE(intertwine_check(g.j5, g.k5, g.p5, {{1.0, 0.5, -2.0}, {0.2, -0.7, 0.4}}).passed);
  EXPECT_THROW(intertwine_check(j, k, rep22_v({1.0, 1.0, 2.0}), {}), PrecondError);
}

TEST(Invariance, Examples) {
  const FourVector x{{1, 1, 0, 9}};
  const FourVector r = apply(d4({{0, 0, std::numbers::pi / 3}, {}}), x);
  EXPECT_NEAR(r[1] * r[1] + r[2] * r[2] + r[3] * r[3], 2.0, kExp);
  EXPECT_NEAR(r[4], 9.0, kExp);
  const FourVector y{{1, 0, 0, 2}};
  const FourVector b = apply(d4({{}, {2.0, 0, 0}}), y);
  EXPECT_NEAR(interval_sq(b), -3.0, kExp * 100);
  EXPECT_GT(std::abs(b[1] - 1.0), 1.0);
  EXPECT_GT(std::abs(b[4] - 2.0), 1.0);
  EXPECT_EQ(interval_sq(apply(d4({{0.3, 0.2, 0.1}, {1, 1, 1}}), FourVector{})), 0.0);
}

TEST(Invariance, SuiteChecksPassAndAreSeeded) {
  const auto a = rotation_invariance_check(1000, 7);
  const auto b = boost_invariance_check(1000, 7);
  EXPECT_TRUE(a.passed);
  EXPECT_TRUE(b.passed);
  EXPECT_EQ(a.max_residual, rotation_invariance_check(1000, 7).max_residual);
  EXPECT_EQ(b.note, boost_invariance_check(1000, 7).note);
}

// ---- properties ----

TEST(SpacetimeProperty, RotationOrthogonalAndTimeFixed) {
  gen::Gen g(50);
  for (int n = 0; n < gen::kCases; ++n) {
    const CMatrix d = d4({{g.real(-3, 3), g.real(-3, 3), g.real(-3, 3)}, {}});
    const oracle::Mat s = oracle::from_cm(d.block(0, 0, 3));
    oracle::Mat st = oracle::zeros(3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) st[r][c] = s[c][r];
    EXPECT_LT(oracle::max_abs_diff(oracle::mul(st, s), oracle::eye(3)), kExp);
    for (int c = 0; c < 3; ++c) {
      EXPECT_LT(std::abs(d(3, c)) + std::abs(d(c, 3)), kExp);
    }
    EXPECT_LT(std::abs(d(3, 3) - 1.0), kExp);
  }
}

TEST(SpacetimeProperty, BoostPreservesMetric) {
  gen::Gen g(51);
  for (int n = 0; n < gen::kCases; ++n) {
    const CMatrix d = d4({{}, {g.real(-1.5, 1.5), g.real(-1.5, 1.5), g.real(-1.5, 1.5)}});
    EXPECT_LT(frobenius_distance(d, d.transpose()), kExp * 10);
    const oracle::Mat dm = oracle::from_cm(d);
    oracle::Mat dt = oracle::zeros(4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) dt[r][c] = dm[c][r];
    EXPECT_LT(oracle::max_abs_diff(oracle::mul(oracle::mul(dt, metric()), dm), metric()), kExp * 100);
  }
}

TEST(SpacetimeProperty, DeterminantIdentity) {
  gen::Gen g(52);
  for (int n = 0; n < 1000; ++n) {
    const FourVector x{{g.real(-10, 10), g.real(-10, 10), g.real(-10, 10), g.real(-10, 10)}};
    const double scale = std::max(1.0, x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4]);
    EXPECT_LT(std::abs(interval_sq_via_det(x) - interval_sq(x)) / scale, kAbs);
    EXPECT_LT(std::abs(interval_sq_via_det(x) - det_oracle(x)) / scale, kAbs);
  }
}

TEST(SpacetimeProperty, AffineComposition) {
  gen::Gen g(53);
  for (int n = 0; n < gen::kCases; ++n) {
    const AffineTransform t1{d4({{g.real(), g.real(), g.real()}, {g.real(), g.real(), g.real()}}),
                             FourVector{{g.real(-5, 5), g.real(-5, 5), g.real(-5, 5), g.real(-5, 5)}}};
    const AffineTransform t2{d4({{g.real(), g.real(), g.real()}, {g.real(), g.real(), g.real()}}),
                             FourVector{{g.real(-5, 5), g.real(-5, 5), g.real(-5, 5), g.real(-5, 5)}}};
    const FourVector x{{g.real(-5, 5), g.real(-5, 5), g.real(-5, 5), g.real(-5, 5)}};
    EXPECT_LT(vec_dist(affine_apply(t2, affine_apply(t1, x)), affine_apply(t2.compose(t1), x)), kExp);
    EXPECT_LT(frobenius_distance(t2.to_matrix() * t1.to_matrix(), t2.compose(t1).to_matrix()), kExp);
  }
}

TEST(SpacetimeProperty, TranslationIsExact) {
  gen::Gen g(54);
  for (int n = 0; n < gen::kCases; ++n) {
    const FourVector a{{g.real(-10, 10), g.real(-10, 10), g.real(-10, 10), g.real(-10, 10)}};
    const CMatrix e = translation_exponential(a);
    CMatrix want = CMatrix::identity(5);
    for (int mu = 0; mu < 4; ++mu) want(mu, 4) = a[mu + 1];
    EXPECT_LT(frobenius_distance(e, want), kAbs);
  }
}

TEST(SpacetimeProperty, IntertwiningRandomParams) {
  gen::Gen g(55);
  const auto [j, k] = rep22_jk();
  const auto a = affine_generators();
  for (int n = 0; n < 100; ++n) {
    const RotBoostParams p{{g.real(-3, 3), g.real(-3, 3), g.real(-3, 3)}, {g.real(), g.real(), g.real()}};
    EXPECT_TRUE(intertwine_check(j, k, gamma(), p).passed);
    EXPECT_TRUE(intertwine_check(a.j5, a.k5, a.p5, p).passed);
  }
}
