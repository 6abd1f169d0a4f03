#include <gtest/gtest.h>

#include <algorithm>

#include "lieforge/rep_transfer.hpp"
#include "lieforge/spacetime.hpp"
#include "lieforge/sun_explorer.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace lieforge;

namespace {

const CheckReport& find(const std::vector<CheckReport>& rs, IdentityId id, std::size_t nth = 0) {
  for (const auto& r : rs)
    if (r.identity == id && nth-- == 0) return r;
  throw std::runtime_error("report not found");
}

void expect_report_invariants(const CheckReport& r) {
  EXPECT_EQ(r.passed, r.max_residual < r.tolerance) << r.label;
  EXPECT_EQ(r.witness.has_value(), !r.passed) << r.label;
}

// Oracle residual for [J^i, J^j] = i eps J^k over all pairs.
double oracle_su2_residual(const GeneratorSet& j) {
  double worst = 0.0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      oracle::Mat rhs = oracle::zeros(j.dim());
      for (int c = 1; c <= 3; ++c) rhs = oracle::add(rhs, oracle::from_cm(j[c]), oracle::I * double(oracle::epsilon(a, b, c)));
      const oracle::Mat lhs = oracle::add(oracle::mul(oracle::from_cm(j[a]), oracle::from_cm(j[b])),
                                          oracle::mul(oracle::from_cm(j[b]), oracle::from_cm(j[a])), -1.0);
      double f = 0.0;
      for (std::size_t r = 0; r < j.dim(); ++r)
        for (std::size_t c = 0; c < j.dim(); ++c) f += std::norm(lhs[r][c] - rhs[r][c]);
      worst = std::max(worst, std::sqrt(f));
    }
  return worst;
}

}  // namespace

TEST(LeviCivita, MatchesPermutationParity) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c) EXPECT_EQ(levi_civita(a, b, c), oracle::epsilon(a, b, c));
}

TEST(CheckSu2Fundamental, SpinHalfPasses) {
  const auto rs = check_su2_fundamental(j2());
  ASSERT_EQ(rs.size(), 2u);
  for (const auto& r : rs) {
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.max_residual, 1e-14);
    expect_report_invariants(r);
  }
}

TEST(CheckSu2Fundamental, UnhalvedMemberFailsWithWitness) {
  const auto j = j2();
  const GeneratorSet broken(j.rep(), j.kind(), {pauli(1), j[2], j[3]});
  const auto rs = check_su2_fundamental(broken);
  const auto& eq2 = find(rs, IdentityId::Eq2);
  EXPECT_FALSE(eq2.passed);
  ASSERT_TRUE(eq2.witness.has_value());
  EXPECT_EQ(eq2.witness->indices, (std::vector<int>{1, 2}));
  EXPECT_NEAR(eq2.max_residual, oracle_su2_residual(broken), 1e-14);
}

TEST(CheckSu2Fundamental, Su3SubsetFailsAnticommutator) {
  const auto gm = sun_generators(3);
  const GeneratorSet first3(gm.rep(), GeneratorKind::AngularMomentum, {gm[1], gm[2], gm[3]});
  const auto rs = check_su2_fundamental(first3);
  EXPECT_TRUE(find(rs, IdentityId::Eq2).passed);
  EXPECT_FALSE(find(rs, IdentityId::Eq3).passed);
}

TEST(CheckSu2Fundamental, ShapeErrors) {
  EXPECT_THROW(check_su2_fundamental(k2()), ShapeError);
  EXPECT_THROW(check_su2_fundamental(v2(1.0, 1.0)), ShapeError);
}

TEST(CheckLorentz, AllThreeReps) {
  const auto [j22, k22] = rep22_jk();
  for (const auto& rs : {check_lorentz(j2(), k2()), check_lorentz(j22, k22), check_lorentz(build_j4(), build_k4())}) {
    ASSERT_EQ(rs.size(), 3u);
    for (const auto& r : rs) {
      EXPECT_TRUE(r.passed) << r.label;
      expect_report_invariants(r);
    }
  }
  EXPECT_EQ(check_lorentz(j2(), k2())[0].identity, IdentityId::Eq7);
  EXPECT_EQ(check_lorentz(j22, k22)[0].identity, IdentityId::Eq11);
  EXPECT_EQ(check_lorentz(build_j4(), build_k4())[0].identity, IdentityId::Eq26);
  EXPECT_THROW(check_lorentz(j2(), k22), ShapeError);
}

TEST(CheckPoincare, MomentumBranchPasses) {
  const auto [j, k] = rep22_jk();
  const auto rs = check_poincare(j, k, momentum({-2.0 * kI, 0.0, 1.0}, MomentumBranch::Plus));
  EXPECT_EQ(rs.size(), 6u);
  for (const auto& r : rs) EXPECT_TRUE(r.passed) << r.label;
}

TEST(CheckPoincare, GenericVectorFailsOnlyCommutingMomenta) {
  const auto [j, k] = rep22_jk();
  const auto rs = check_poincare(j, k, rep22_v({1.0, 1.0, 1.0}));
  for (const auto& r : rs) {
    expect_report_invariants(r);
    if (r.identity == IdentityId::Eq20)
      EXPECT_FALSE(r.passed);
    else
      EXPECT_TRUE(r.passed) << r.label;
  }
}

TEST(CheckPoincare, AffineGeneratorsPass) {
  const auto g = affine_generators();
  for (const auto& r : check_poincare(g.j5, g.k5, g.p5)) EXPECT_TRUE(r.passed) << r.label;
}

TEST(CheckPoincare, ShapeErrors) {
  const auto [j, k] = rep22_jk();
  EXPECT_THROW(check_poincare(j, k, j), ShapeError);
  EXPECT_THROW(check_poincare(j, k, v2(1.0, 1.0)), ShapeError);
}

TEST(Check2RepAsymmetry, ConfirmsAntisymmetry) {
  const auto r = check_2rep_vk_asymmetry();
  EXPECT_TRUE(r.passed);
  expect_report_invariants(r);
  // hand oracle: [V^1,K^2] = -[V^2,K^1] != 0, diagonal zero
  const auto v = v2(1.0, 1.0);
  const auto k = k2();
  EXPECT_LT(frobenius_norm(commutator(v[1], k[2]) + commutator(v[2], k[1])), 1e-12);
  EXPECT_GT(frobenius_norm(commutator(v[1], k[2])), 0.1);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(frobenius_norm(commutator(v[i], k[i])), 0.0);
}

TEST(CheckReport, MakeEnforcesInvariants) {
  const auto pass = CheckReport::make(IdentityId::Eq2, "x", 0.5, 1.0);
  EXPECT_TRUE(pass.passed);
  EXPECT_FALSE(pass.witness.has_value());
  const auto fail = CheckReport::make(IdentityId::Eq2, "x", 1.0, 1.0);
  EXPECT_FALSE(fail.passed);
  EXPECT_TRUE(fail.witness.has_value());
  ResidualTracker t;
  t.observe(std::nan(""), {1}, "nan");
  EXPECT_FALSE(t.report(IdentityId::Eq2, "nan", 1.0).passed);
}

TEST(IdentityNames, RoundTrip) {
  for (auto id : {IdentityId::Eq2, IdentityId::Eq19, IdentityId::Eq26, IdentityId::Ex7})
    EXPECT_EQ(identity_from_string(to_string(id)), id);
  EXPECT_THROW(identity_from_string("Eq99"), ParseError);
}

// ---- properties ----

TEST(AlgebraProperty, ResidualsAreDeterministic) {
  const auto [j, k] = rep22_jk();
  const auto v = rep22_v({0.3 + 0.2 * kI, -1.1 * kI, 2.0});
  const auto a = check_poincare(j, k, v, 2.0);
  const auto b = check_poincare(j, k, v, 2.0);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t n = 0; n < a.size(); ++n) EXPECT_EQ(a[n].max_residual, b[n].max_residual);
}

TEST(AlgebraProperty, ResidualMatchesOracleOnRandomFamilies) {
  gen::Gen g(30);
  for (int n = 0; n < gen::kCases; ++n) {
    const GeneratorSet j(RepLabel::make(RepTag::Custom, 3), GeneratorKind::AngularMomentum,
                         {g.hermitian(3), g.hermitian(3), g.hermitian(3)});
    const auto rs = check_su2_fundamental(j);
    EXPECT_NEAR(find(rs, IdentityId::Eq2).max_residual, oracle_su2_residual(j), 1e-12);
  }
}

TEST(AlgebraProperty, PoincareAcrossAlphaAndConstants) {
  gen::Gen g(31);
  const auto [j, k] = rep22_jk();
  for (int n = 0; n < gen::kCases; ++n) {
    const VectorParams p{g.complex(3.0), 0.0, g.nonzero_complex(2.0)};
    for (const auto& r : check_poincare(j, k, momentum(p, MomentumBranch::Plus), p.alpha))
      EXPECT_TRUE(r.passed) << r.label;
  }
}

TEST(AlgebraProperty, SinglePerturbationIsDetected) {
  gen::Gen g(32);
  const auto [j, k] = rep22_jk();
  const auto p = momentum({-2.0 * kI, 0.0, 1.0}, MomentumBranch::Plus);
  for (int n = 0; n < gen::kCases; ++n) {
    const std::size_t member = 1 + g.index(3), row = g.index(4), col = g.index(4);
    const CScalar delta = n % 2 ? CScalar{1e-6, 0.0} : CScalar{0.0, 1e-6};
    EXPECT_FALSE(all_passed(check_poincare(j.perturbed(member, row, col, delta), k, p)));
    EXPECT_FALSE(all_passed(check_poincare(j, k.perturbed(member, row, col, delta), p)));
    EXPECT_FALSE(all_passed(check_poincare(j, k, p.perturbed(member + g.index(2), row, col, delta))));
  }
}
