#include "lieforge/su2_reps.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace lieforge {

namespace {

constexpr std::array<std::pair<RepTag, std::string_view>, 9> kRepNames{{
    {RepTag::Rep2, "Rep2"},
    {RepTag::Rep2plus2, "Rep2plus2"},
    {RepTag::Rep4, "Rep4"},
    {RepTag::Rep5affine, "Rep5affine"},
    {RepTag::SU3fund, "SU3fund"},
    {RepTag::SU3adjoint, "SU3adjoint"},
    {RepTag::SUNfund, "SUNfund"},
    {RepTag::SUNadjoint, "SUNadjoint"},
    {RepTag::Custom, "Custom"},
}};

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 4> kKindNames{{
    {GeneratorKind::AngularMomentum, "AngularMomentum"},
    {GeneratorKind::Boost, "Boost"},
    {GeneratorKind::Vector, "Vector"},
    {GeneratorKind::Momentum, "Momentum"},
}};

std::size_t fixed_dim(RepTag tag) {
  switch (tag) {
    case RepTag::Rep2: return 2;
    case RepTag::Rep2plus2: return 4;
    case RepTag::Rep4: return 4;
    case RepTag::Rep5affine: return 5;
    case RepTag::SU3fund: return 3;
    case RepTag::SU3adjoint: return 8;
    default: return 0;
  }
}

GeneratorSet scaled(const GeneratorSet& s, GeneratorKind kind, CScalar factor) {
  std::vector<CMatrix> out;
  for (const auto& m : s.members()) out.push_back(m * factor);
  return GeneratorSet(s.rep(), kind, std::move(out));
}

CMatrix off_block(const CMatrix& upper, const CMatrix& lower) {
  CMatrix m(4);
  m.set_block(0, 2, upper);
  m.set_block(2, 0, lower);
  return m;
}

}  // namespace

RepLabel RepLabel::make(RepTag tag, std::size_t dim) {
  const std::size_t want = fixed_dim(tag);
  if (want != 0 && want != dim) {
    throw ParamError("rep " + std::string(to_string(tag)) + " has dimension " +
                     std::to_string(want) + ", not " + std::to_string(dim));
  }
  if (dim == 0) throw ParamError("rep dimension must be positive");
  return RepLabel{tag, dim};
}

RepLabel RepLabel::of(RepTag tag) {
  const std::size_t d = fixed_dim(tag);
  if (d == 0) throw ParamError("rep " + std::string(to_string(tag)) + " needs an explicit dimension");
  return RepLabel{tag, d};
}

std::string_view to_string(RepTag tag) {
  for (const auto& [t, n] : kRepNames)
    if (t == tag) return n;
  return "Custom";
}

std::string_view to_string(GeneratorKind kind) {
  for (const auto& [k, n] : kKindNames)
    if (k == kind) return n;
  return "Vector";
}

RepTag rep_tag_from_string(std::string_view s) {
  for (const auto& [t, n] : kRepNames)
    if (n == s) return t;
  throw ParseError("unknown rep tag '" + std::string(s) + "'");
}

GeneratorKind generator_kind_from_string(std::string_view s) {
  for (const auto& [k, n] : kKindNames)
    if (n == s) return k;
  throw ParseError("unknown generator kind '" + std::string(s) + "'");
}

GeneratorSet::GeneratorSet(RepLabel rep, GeneratorKind kind, std::vector<CMatrix> members)
    : rep_(rep), kind_(kind), members_(std::move(members)) {
  const bool sun = rep_.tag == RepTag::SU3fund || rep_.tag == RepTag::SU3adjoint ||
                   rep_.tag == RepTag::SUNfund || rep_.tag == RepTag::SUNadjoint;
  const std::size_t want =
      (kind_ == GeneratorKind::AngularMomentum || kind_ == GeneratorKind::Boost) ? 3 : 4;
  if (sun ? members_.empty() : members_.size() != want) {
    throw ShapeError(std::string(to_string(kind_)) + " set needs " + std::to_string(want) +
                     " members, got " + std::to_string(members_.size()));
  }
  for (const auto& m : members_) {
    if (m.dim() != rep_.dim) {
      throw DimError("generator of dimension " + std::to_string(m.dim()) + " in rep of dimension " +
                     std::to_string(rep_.dim));
    }
    if (!m.is_finite()) throw ParamError("generator has non-finite entries");
  }
}

const CMatrix& GeneratorSet::operator[](std::size_t index) const {
  if (index < 1 || index > members_.size()) {
    throw IndexError("generator index " + std::to_string(index) + " outside 1.." +
                     std::to_string(members_.size()));
  }
  return members_[index - 1];
}

GeneratorSet GeneratorSet::perturbed(std::size_t index, std::size_t row, std::size_t col,
                                     CScalar delta) const {
  auto copy = members_;
  if (index < 1 || index > copy.size()) throw IndexError("perturbed: member index out of range");
  CMatrix& m = copy[index - 1];
  if (row >= m.dim() || col >= m.dim()) throw IndexError("perturbed: entry out of range");
  m.set(row, col, m(row, col) + delta);
  return GeneratorSet(rep_, kind_, std::move(copy));
}

double GeneratorSet::hermitian_traceless_residual() const {
  double worst = 0.0;
  for (const auto& m : members_) {
    worst = std::max(worst, frobenius_distance(m, m.adjoint()));
    worst = std::max(worst, std::abs(m.trace()));
  }
  return worst;
}

CMatrix pauli(int index) {
  switch (index) {
    case 1: return CMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case 2: return CMatrix{{0.0, -kI}, {kI, 0.0}};
    case 3: return CMatrix{{1.0, 0.0}, {0.0, -1.0}};
    case 4: return CMatrix::identity(2);
    default: throw IndexError("pauli index " + std::to_string(index) + " outside 1..4");
  }
}

GeneratorSet j2() {
  return GeneratorSet(RepLabel::of(RepTag::Rep2), GeneratorKind::AngularMomentum,
                      {pauli(1) * 0.5, pauli(2) * 0.5, pauli(3) * 0.5});
}

GeneratorSet k2() { return scaled(j2(), GeneratorKind::Boost, kI); }

GeneratorSet v2(CScalar c, CScalar c4) {
  const auto j = j2();
  return GeneratorSet(RepLabel::of(RepTag::Rep2), GeneratorKind::Vector,
                      {j[1] * c, j[2] * c, j[3] * c, CMatrix::identity(2) * c4});
}

std::pair<GeneratorSet, GeneratorSet> rep22_jk() {
  const auto j = j2();
  const auto k = k2();
  std::vector<CMatrix> jm, km;
  for (std::size_t i = 1; i <= 3; ++i) {
    jm.push_back(direct_sum(j[i], j[i]));
    km.push_back(direct_sum(k[i], -k[i]));
  }
  const auto rep = RepLabel::of(RepTag::Rep2plus2);
  return {GeneratorSet(rep, GeneratorKind::AngularMomentum, std::move(jm)),
          GeneratorSet(rep, GeneratorKind::Boost, std::move(km))};
}

namespace {

GeneratorSet build_22_vectors(const VectorParams& p, GeneratorKind kind) {
  if (p.alpha == CScalar{}) throw ParamError("alpha must be nonzero");
  const auto j = j2();
  const CMatrix one = CMatrix::identity(2);
  const CScalar time_scale = 1.0 / (2.0 * p.alpha);
  std::vector<CMatrix> members;
  for (std::size_t i = 1; i <= 3; ++i) members.push_back(off_block(j[i] * p.c_plus, j[i] * p.c_minus));
  members.push_back(off_block(one * (p.c_plus * time_scale), one * (-p.c_minus * time_scale)));
  return GeneratorSet(RepLabel::of(RepTag::Rep2plus2), kind, std::move(members));
}

}  // namespace

GeneratorSet rep22_v(const VectorParams& p) { return build_22_vectors(p, GeneratorKind::Vector); }

GeneratorSet momentum(const VectorParams& p, MomentumBranch branch) {
  if (branch == MomentumBranch::Plus && p.c_minus != CScalar{})
    throw ParamError("Plus-branch momentum matrices require c_minus == 0");
  if (branch == MomentumBranch::Minus && p.c_plus != CScalar{})
    throw ParamError("Minus-branch momentum matrices require c_plus == 0");
  return build_22_vectors(p, GeneratorKind::Momentum);
}

GeneratorSet gamma() {
  std::vector<CMatrix> members;
  for (int i = 1; i <= 3; ++i) members.push_back(off_block(pauli(i) * -kI, pauli(i) * kI));
  members.push_back(off_block(pauli(4) * -kI, pauli(4) * -kI));
  return GeneratorSet(RepLabel::of(RepTag::Rep2plus2), GeneratorKind::Vector, std::move(members));
}

CMatrix gamma5() {
  const auto g = gamma();
  return (g[4] * g[1] * g[2] * g[3]) * -kI;
}

std::pair<CMatrix, CMatrix> gamma5_projectors() {
  const CMatrix one = CMatrix::identity(4);
  const CMatrix g5 = gamma5();
  return {(one + g5) * 0.5, (one - g5) * 0.5};
}

GeneratorSet project_vector(const CMatrix& projector, const GeneratorSet& v) {
  std::vector<CMatrix> members;
  for (const auto& m : v.members()) members.push_back(projector * m);
  return GeneratorSet(v.rep(), GeneratorKind::Momentum, std::move(members));
}

}  // namespace lieforge
