#include <gtest/gtest.h>

#include "lieforge/rep_transfer.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace lieforge;
using oracle::I;

namespace {

constexpr double kAbs = 1e-12;

// Closed forms written from the index formulas, independent of the library.
oracle::Mat j4_oracle(int i) {
  oracle::Mat m = oracle::zeros(4);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) m[r - 1][c - 1] = I * double(oracle::epsilon(r, i, c));
  return m;
}

oracle::Mat b_oracle(int i, oracle::C alpha) {
  oracle::Mat m = oracle::zeros(4);
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu)
      m[mu - 1][nu - 1] = -I * (alpha * double(oracle::delta(i, mu) * oracle::delta(4, nu)) +
                                double(oracle::delta(i, nu) * oracle::delta(4, mu)) / alpha);
  return m;
}

GeneratorSet four(const std::vector<CMatrix>& ms, GeneratorKind kind = GeneratorKind::Vector) {
  return GeneratorSet(RepLabel::of(RepTag::Rep2plus2), kind, ms);
}

void expect_closed_forms(const GeneratorSet& v, CScalar alpha) {
  const auto [j, k] = rep22_jk();
  const auto a = extract_coeffs(v, j);
  const auto b = extract_coeffs(v, k);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_LT(frobenius_distance(a.slice(i), oracle::to_cm(j4_oracle(i))), kAbs);
    EXPECT_LT(frobenius_distance(b.slice(i), oracle::to_cm(b_oracle(i, alpha))), kAbs);
  }
}

}  // namespace

TEST(ExtractCoeffs, GammaDefaults) {
  const auto [j, k] = rep22_jk();
  const auto a = extract_coeffs(rep22_v(), j);
  EXPECT_EQ(a.source(), CoeffTensor::Source::FromJ);
  EXPECT_EQ(a.blocks(), CoeffTensor::Blocks::Both);
  for (int mu = 1; mu <= 4; ++mu)
    for (int i = 1; i <= 3; ++i)
      for (int nu = 1; nu <= 4; ++nu) EXPECT_LT(std::abs(a(mu, i, nu) - I * double(oracle::epsilon(mu, i, nu))), kAbs);

  const auto b = extract_coeffs(rep22_v(), k);
  EXPECT_EQ(b.source(), CoeffTensor::Source::FromK);
  for (int mu = 1; mu <= 4; ++mu)
    for (int i = 1; i <= 3; ++i)
      for (int nu = 1; nu <= 4; ++nu) {
        const double want = oracle::delta(i, mu) * oracle::delta(4, nu) + oracle::delta(i, nu) * oracle::delta(4, mu);
        EXPECT_LT(std::abs(b(mu, i, nu) + I * want), kAbs);
      }
}

TEST(ExtractCoeffs, IdentityCommutesToZero) {
  const CMatrix one = CMatrix::identity(4);
  const GeneratorSet ones(RepLabel::of(RepTag::Rep2plus2), GeneratorKind::Boost, {one, one, one});
  const auto t = extract_coeffs(rep22_v(), ones);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(frobenius_norm(t.slice(i)), 0.0);
}

TEST(ExtractCoeffs, MomentumBranchesUseOneBlock) {
  const auto [j, k] = rep22_jk();
  const auto plus = extract_coeffs(momentum({1.0, 0.0, 1.0}, MomentumBranch::Plus), k);
  EXPECT_EQ(plus.blocks(), CoeffTensor::Blocks::UpperOnly);
  const auto minus = extract_coeffs(momentum({0.0, 1.0, 1.0}, MomentumBranch::Minus), k);
  EXPECT_EQ(minus.blocks(), CoeffTensor::Blocks::LowerOnly);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_LT(frobenius_distance(plus.slice(i), build_k4()[i]), kAbs);
    EXPECT_LT(frobenius_distance(minus.slice(i), build_k4()[i]), kAbs);
  }
}

TEST(ExtractCoeffs, Errors) {
  const auto [j, k] = rep22_jk();
  // diagonal blocks present
  EXPECT_THROW(extract_coeffs(four({j[1], j[2], j[3], CMatrix::identity(4)}), j), ShapeError);
  // zero V
  EXPECT_THROW(extract_coeffs(rep22_v({0.0, 0.0, 1.0}), j), BasisError);
  // V^4 upper block zero: upper family rank 3
  {
    auto v = rep22_v({1.0, 0.0, 1.0});
    std::vector<CMatrix> ms = v.members();
    ms[3] = CMatrix(4);
    EXPECT_THROW(extract_coeffs(four(ms), j), BasisError);
  }
  // A with off-diagonal blocks: commutators pick up diagonal blocks outside the span
  {
    const auto v = rep22_v();
    const GeneratorSet as(RepLabel::of(RepTag::Rep2plus2), GeneratorKind::Boost, {v[1], v[2], v[3]});
    EXPECT_THROW(extract_coeffs(v, as), NotVClosedError);
  }
  // generic block-diagonal A: each block family spans all 2x2 blocks, so the blocks disagree
  {
    gen::Gen g(41);
    const CMatrix a = direct_sum(g.hermitian(2), g.hermitian(2));
    const GeneratorSet as(RepLabel::of(RepTag::Rep2plus2), GeneratorKind::Boost, {a, a, a});
    EXPECT_THROW(extract_coeffs(rep22_v(), as), InconsistentBlocksError);
  }
  // upper block built with alpha = 1, lower with alpha = 2: the boost coefficients disagree
  {
    const auto up = rep22_v({1.0, 0.0, 1.0});
    const auto low = rep22_v({0.0, 1.0, 2.0});
    std::vector<CMatrix> ms;
    for (int mu = 1; mu <= 4; ++mu) ms.push_back(up[mu] + low[mu]);
    EXPECT_NO_THROW(extract_coeffs(four(ms), j));
    EXPECT_THROW(extract_coeffs(four(ms), k), InconsistentBlocksError);
  }
}

TEST(BuildJ4K4, ClosedForms) {
  const auto j4 = build_j4();
  const auto k4 = build_k4();
  // J4^3: (1,2) = -i, (2,1) = +i only
  CMatrix want(4);
  want(0, 1) = -kI;
  want(1, 0) = kI;
  EXPECT_EQ(j4[3], want);
  CMatrix k1(4);
  k1(0, 3) = k1(3, 0) = -kI;
  EXPECT_EQ(k4[1], k1);
  for (int i = 1; i <= 3; ++i) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_EQ(j4[i](3, c), CScalar{});
      EXPECT_EQ(j4[i](c, 3), CScalar{});
    }
    EXPECT_EQ(frobenius_norm(j4[i] + j4[i].transpose()), 0.0);
    EXPECT_EQ(frobenius_norm(k4[i] - k4[i].transpose()), 0.0);
    EXPECT_LT(frobenius_distance(boost_coefficients(1.0)[i], k4[i]), kAbs);
  }
}

TEST(VerifyTransfer, DefaultsPass) {
  const auto rs = verify_transfer();
  EXPECT_EQ(rs.size(), 9u);
  for (const auto& r : rs) EXPECT_TRUE(r.passed) << r.label;
  const auto kk = rs.back();
  EXPECT_EQ(kk.identity, IdentityId::Eq26);
  EXPECT_FALSE(kk.note.empty());
}

TEST(VerifyTransfer, KKClosesOnJNotK) {
  const auto j4 = build_j4();
  const auto k4 = build_k4();
  // [K^1,K^2] = -i J^3 and differs from -i K^3
  EXPECT_LT(frobenius_distance(commutator(k4[1], k4[2]), j4[3] * -kI), kAbs);
  EXPECT_GT(frobenius_distance(commutator(k4[1], k4[2]), k4[3] * -kI), 1.0);
}

// ---- properties ----

TEST(TransferProperty, SlicesMatchClosedFormsForRandomConstants) {
  gen::Gen g(41);
  for (int n = 0; n < gen::kCases; ++n) {
    const CScalar cp = g.nonzero_complex(), cm = g.nonzero_complex();
    const CScalar alpha = n % 3 == 0 ? CScalar{1.0} : n % 3 == 1 ? CScalar{-1.0} : CScalar{2.0};
    expect_closed_forms(rep22_v({cp, cm, alpha}), alpha);                              // both blocks
    expect_closed_forms(rep22_v({cm, cp, alpha}), alpha);                              // swapped
    expect_closed_forms(momentum({cp, 0.0, alpha}, MomentumBranch::Plus), alpha);      // upper only
    expect_closed_forms(momentum({0.0, cm, alpha}, MomentumBranch::Minus), alpha);     // lower only
  }
}

TEST(TransferProperty, TransferIdentityForRandomConstants) {
  gen::Gen g(42);
  const auto [j, k] = rep22_jk();
  for (int n = 0; n < gen::kCases; ++n) {
    const VectorParams p{g.nonzero_complex(), g.nonzero_complex(), 1.0};
    for (const auto& r : verify_transfer(rep22_v(p), j, k, build_j4(), build_k4(), 1.0)) EXPECT_TRUE(r.passed) << r.label;
  }
}

TEST(TransferProperty, ExtractionIsDeterministic) {
  const auto [j, k] = rep22_jk();
  const auto v = rep22_v({0.7 - 0.1 * kI, 1.3 * kI, 1.0});
  const auto a = extract_coeffs(v, k), b = extract_coeffs(v, k);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(a.slice(i), b.slice(i));
}

TEST(TransferProperty, J4IsSu2Adjoint) {
  const auto j4 = build_j4();
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      CMatrix rhs(4);
      for (int c = 1; c <= 3; ++c) rhs += j4[c] * (kI * double(oracle::epsilon(a, b, c)));
      EXPECT_LT(frobenius_distance(commutator(j4[a], j4[b]), rhs), kAbs);
    }
}
