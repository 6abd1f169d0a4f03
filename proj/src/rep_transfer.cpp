#include "lieforge/rep_transfer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lieforge {

namespace {

std::size_t flat(int mu, int i, int nu) {
  if (mu < 1 || mu > 4 || i < 1 || i > 3 || nu < 1 || nu > 4) throw IndexError("coefficient index out of range");
  return static_cast<std::size_t>(((mu - 1) * 3 + (i - 1)) * 4 + (nu - 1));
}

enum class Half { Upper, Lower };

CMatrix off_block_of(const CMatrix& m, Half h) { return h == Half::Upper ? m.block(0, 2, 2) : m.block(2, 0, 2); }

std::vector<CMatrix> block_family(const GeneratorSet& v, Half h) {
  std::vector<CMatrix> out;
  for (const auto& m : v.members()) out.push_back(off_block_of(m, h));
  return out;
}

bool all_zero(const std::vector<CMatrix>& ms) {
  return std::all_of(ms.begin(), ms.end(), [](const CMatrix& m) { return frobenius_norm(m) == 0.0; });
}

}  // namespace

CoeffTensor::CoeffTensor(Source source, Blocks blocks) : source_(source), blocks_(blocks) {}

CScalar CoeffTensor::operator()(int mu, int i, int nu) const { return values_[flat(mu, i, nu)]; }

void CoeffTensor::set(int mu, int i, int nu, CScalar v) { values_[flat(mu, i, nu)] = v; }

CMatrix CoeffTensor::slice(int i) const {
  CMatrix out(4);
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) out(mu - 1, nu - 1) = (*this)(mu, i, nu);
  return out;
}

std::string_view to_string(CoeffTensor::Source s) {
  switch (s) {
    case CoeffTensor::Source::FromJ: return "FromJ";
    case CoeffTensor::Source::FromK: return "FromK";
    default: return "Other";
  }
}

std::string_view to_string(CoeffTensor::Blocks b) {
  switch (b) {
    case CoeffTensor::Blocks::Both: return "Both";
    case CoeffTensor::Blocks::UpperOnly: return "UpperOnly";
    default: return "LowerOnly";
  }
}

CoeffTensor extract_coeffs(const GeneratorSet& v, const GeneratorSet& a, const Tolerance& tol) {
  tol.validate();
  if (v.size() != 4) throw ShapeError("extract_coeffs: V needs 4 members");
  if (a.size() != 3) throw ShapeError("extract_coeffs: A needs 3 members");
  if (v.dim() != 4 || a.dim() != 4) throw ShapeError("extract_coeffs: expects the 4-dimensional (2+2) rep");
  for (int mu = 1; mu <= 4; ++mu) {
    if (frobenius_norm(v[mu].block(0, 0, 2)) != 0.0 || frobenius_norm(v[mu].block(2, 2, 2)) != 0.0)
      throw ShapeError("extract_coeffs: V^" + std::to_string(mu) + " is not off-block-diagonal");
  }

  const auto upper = block_family(v, Half::Upper);
  const auto lower = block_family(v, Half::Lower);
  const bool use_upper = !all_zero(upper);
  const bool use_lower = !all_zero(lower);
  if (!use_upper && !use_lower) throw BasisError("extract_coeffs: V vanishes identically");

  const auto blocks = use_upper && use_lower ? CoeffTensor::Blocks::Both
                      : use_upper            ? CoeffTensor::Blocks::UpperOnly
                                             : CoeffTensor::Blocks::LowerOnly;
  const auto source = a.kind() == GeneratorKind::AngularMomentum ? CoeffTensor::Source::FromJ
                      : a.kind() == GeneratorKind::Boost         ? CoeffTensor::Source::FromK
                                                                 : CoeffTensor::Source::Other;
  CoeffTensor out(source, blocks);

  auto solve = [&](const CMatrix& target, const std::vector<CMatrix>& basis, int mu, int i) {
    const auto d = decompose_in_basis(target, basis, tol);
    if (d.residual > tol.abs_eps * std::max(1.0, frobenius_norm(target))) {
      throw NotVClosedError("[V^" + std::to_string(mu) + ", A^" + std::to_string(i) +
                            "] is not in the span of V (residual " + std::to_string(d.residual) + ")");
    }
    return d.coeffs;
  };

  for (int mu = 1; mu <= 4; ++mu) {
    for (int i = 1; i <= 3; ++i) {
      const CMatrix comm = commutator(v[mu], a[i]);
      if (frobenius_norm(comm.block(0, 0, 2)) > tol.abs_eps || frobenius_norm(comm.block(2, 2, 2)) > tol.abs_eps)
        throw NotVClosedError("[V^" + std::to_string(mu) + ", A^" + std::to_string(i) +
                              "] has diagonal blocks; A must be block-diagonal");

      std::vector<CScalar> coeffs;
      if (use_upper) coeffs = solve(off_block_of(comm, Half::Upper), upper, mu, i);
      if (use_lower) {
        auto low = solve(off_block_of(comm, Half::Lower), lower, mu, i);
        if (use_upper) {
          for (std::size_t n = 0; n < 4; ++n) {
            if (std::abs(low[n] - coeffs[n]) > tol.abs_eps) {
              throw InconsistentBlocksError("upper and lower blocks disagree on coefficient (" +
                                            std::to_string(mu) + "," + std::to_string(i) + "," +
                                            std::to_string(n + 1) + ")");
            }
          }
        } else {
          coeffs = std::move(low);
        }
      } else if (frobenius_norm(off_block_of(comm, Half::Lower)) > tol.abs_eps) {
        throw NotVClosedError("lower block of [V^" + std::to_string(mu) + ", A^" + std::to_string(i) +
                              "] is nonzero while V has no lower block");
      }
      if (!use_upper && frobenius_norm(off_block_of(comm, Half::Upper)) > tol.abs_eps) {
        throw NotVClosedError("upper block of [V^" + std::to_string(mu) + ", A^" + std::to_string(i) +
                              "] is nonzero while V has no upper block");
      }
      for (int nu = 1; nu <= 4; ++nu) out.set(mu, i, nu, coeffs[nu - 1]);
    }
  }
  return out;
}

GeneratorSet build_j4() {
  std::vector<CMatrix> members;
  for (int i = 1; i <= 3; ++i) {
    CMatrix m(4);
    for (int rho = 1; rho <= 4; ++rho)
      for (int mu = 1; mu <= 4; ++mu) m(rho - 1, mu - 1) = kI * double(levi_civita(rho, i, mu));
    members.push_back(m);
  }
  return GeneratorSet(RepLabel::of(RepTag::Rep4), GeneratorKind::AngularMomentum, std::move(members));
}

GeneratorSet boost_coefficients(CScalar alpha) {
  if (alpha == CScalar{}) throw ParamError("alpha must be nonzero");
  std::vector<CMatrix> members;
  for (int i = 1; i <= 3; ++i) {
    CMatrix m(4);
    m(i - 1, 3) = -kI * alpha;
    m(3, i - 1) = -kI / alpha;
    members.push_back(m);
  }
  return GeneratorSet(RepLabel::of(RepTag::Rep4), GeneratorKind::Boost, std::move(members));
}

GeneratorSet build_k4() {
  std::vector<CMatrix> members;
  for (int i = 1; i <= 3; ++i) {
    CMatrix m(4);
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        m(a - 1, b - 1) = -kI * double(kronecker(a, i) * kronecker(b, 4) + kronecker(b, i) * kronecker(a, 4));
    members.push_back(m);
  }
  return GeneratorSet(RepLabel::of(RepTag::Rep4), GeneratorKind::Boost, std::move(members));
}

namespace {

GeneratorSet slices_as_set(const CoeffTensor& t, GeneratorKind kind) {
  return GeneratorSet(RepLabel::of(RepTag::Rep4), kind, {t.slice(1), t.slice(2), t.slice(3)});
}

// Lorentz structure constants s^{ikn}_(AB) = sign * i eps^{ikn}, with C the
// family on the right-hand side.
struct StructureRow {
  char a, b, c;
  double sign;
};
constexpr StructureRow kLorentzTable[] = {
    {'J', 'J', 'J', 1.0},
    {'J', 'K', 'K', 1.0},
    {'K', 'J', 'K', 1.0},
    {'K', 'K', 'J', -1.0},
};

}  // namespace

std::vector<CheckReport> verify_transfer(const Tolerance& tol, const VectorParams& params) {
  const auto [j, k] = rep22_jk();
  return verify_transfer(rep22_v(params), j, k, build_j4(), build_k4(), params.alpha, tol);
}

std::vector<CheckReport> verify_transfer(const GeneratorSet& v, const GeneratorSet& j, const GeneratorSet& k,
                                         const GeneratorSet& j4, const GeneratorSet& k4, CScalar alpha,
                                         const Tolerance& tol) {
  tol.validate();
  const auto a_set = slices_as_set(extract_coeffs(v, j, tol), GeneratorKind::AngularMomentum);
  const auto b_set = slices_as_set(extract_coeffs(v, k, tol), GeneratorKind::Boost);
  auto pick = [&](char c) -> const GeneratorSet& { return c == 'J' ? a_set : b_set; };

  std::vector<CheckReport> out;
  for (const auto& row : kLorentzTable) {
    ResidualTracker t;
    const auto& x = pick(row.a);
    const auto& y = pick(row.b);
    const auto& z = pick(row.c);
    for (int i = 1; i <= 3; ++i) {
      for (int kk = 1; kk <= 3; ++kk) {
        CMatrix rhs(4);
        for (int n = 1; n <= 3; ++n) rhs += z[n] * (kI * (row.sign * levi_civita(i, kk, n)));
        t.observe(frobenius_distance(commutator(x[i], y[kk]), rhs), {i, kk},
                  std::string("[") + row.a + "-coeff" + std::to_string(i) + "," + row.b + "-coeff" +
                      std::to_string(kk) + "]");
      }
    }
    out.push_back(t.report(IdentityId::Eq24,
                           std::string("coefficients of (") + row.a + "," + row.b + ") close like [" + row.a +
                               "," + row.b + "]",
                           tol.abs_eps));
  }

  const auto b_closed = boost_coefficients(alpha);
  ResidualTracker slice_j, slice_k;
  for (int i = 1; i <= 3; ++i) {
    slice_j.observe(frobenius_distance(a_set[i], j4[i]), {i}, "a^" + std::to_string(i) + " vs J4^" + std::to_string(i));
    slice_k.observe(frobenius_distance(b_set[i], b_closed[i]), {i},
                    "b^" + std::to_string(i) + " vs closed-form boost coefficients");
  }
  out.push_back(slice_j.report(IdentityId::Eq25, "extracted a slices = J4 closed form", tol.abs_eps));
  out.push_back(slice_k.report(IdentityId::Eq25, "extracted b slices = K4 closed form (alpha-scaled)", tol.abs_eps));

  auto lorentz = check_lorentz(j4, k4, tol);
  double printed = 0.0;
  for (int i = 1; i <= 3; ++i) {
    for (int jj = 1; jj <= 3; ++jj) {
      CMatrix rhs(4);
      for (int n = 1; n <= 3; ++n) rhs += k4[n] * (-kI * double(levi_civita(i, jj, n)));
      printed = std::max(printed, frobenius_distance(commutator(k4[i], k4[jj]), rhs));
    }
  }
  lorentz.back().note = "verified against -i eps J^k; the variant with K^k on the right has residual " +
                        std::to_string(printed) + " and does not hold";
  out.insert(out.end(), lorentz.begin(), lorentz.end());
  return out;
}

}  // namespace lieforge
