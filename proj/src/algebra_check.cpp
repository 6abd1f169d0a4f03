#include "lieforge/algebra_check.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace lieforge {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 27> kIdentityNames{{
    {IdentityId::Eq2, "Eq2"},   {IdentityId::Eq3, "Eq3"},   {IdentityId::Eq6, "Eq6"},
    {IdentityId::Eq7, "Eq7"},   {IdentityId::Eq10, "Eq10"}, {IdentityId::Eq11, "Eq11"},
    {IdentityId::Eq12, "Eq12"}, {IdentityId::Eq13, "Eq13"}, {IdentityId::Eq15, "Eq15"},
    {IdentityId::Eq16, "Eq16"}, {IdentityId::Eq18, "Eq18"}, {IdentityId::Eq19, "Eq19"},
    {IdentityId::Eq20, "Eq20"}, {IdentityId::Eq24, "Eq24"}, {IdentityId::Eq25, "Eq25"},
    {IdentityId::Eq26, "Eq26"}, {IdentityId::Eq27, "Eq27"}, {IdentityId::Eq29, "Eq29"},
    {IdentityId::Eq30, "Eq30"}, {IdentityId::Eq31, "Eq31"}, {IdentityId::Ex1, "Ex1"},
    {IdentityId::Ex2, "Ex2"},   {IdentityId::Ex3, "Ex3"},   {IdentityId::Ex4, "Ex4"},
    {IdentityId::Ex5, "Ex5"},   {IdentityId::Ex6, "Ex6"},   {IdentityId::Ex7, "Ex7"},
}};

void require(const GeneratorSet& s, std::size_t count, const char* what) {
  if (s.size() != count) {
    throw ShapeError(std::string(what) + " must have " + std::to_string(count) + " members, got " +
                     std::to_string(s.size()));
  }
}

void require_same_dim(const GeneratorSet& a, const GeneratorSet& b) {
  if (a.dim() != b.dim()) throw ShapeError("generator sets live in different dimensions");
}

std::string pair_text(char a, int i, char b, int j) {
  return std::string("[") + a + std::to_string(i) + "," + b + std::to_string(j) + "]";
}

// sum_k coeff(k) * S^k for k in 1..S.size()
template <class Coeff>
CMatrix combination(const GeneratorSet& s, Coeff coeff) {
  CMatrix out(s.dim());
  for (int k = 1; k <= static_cast<int>(s.size()); ++k) {
    const CScalar c = coeff(k);
    if (c != CScalar{}) out += s[k] * c;
  }
  return out;
}

IdentityId lorentz_id(RepTag tag) {
  switch (tag) {
    case RepTag::Rep2: return IdentityId::Eq7;
    case RepTag::Rep2plus2: return IdentityId::Eq11;
    case RepTag::Rep4: return IdentityId::Eq26;
    default: return IdentityId::Eq18;
  }
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [i, n] : kIdentityNames)
    if (i == id) return n;
  return "?";
}

IdentityId identity_from_string(std::string_view s) {
  for (const auto& [i, n] : kIdentityNames)
    if (n == s) return i;
  throw ParseError("unknown identity '" + std::string(s) + "'");
}

CheckReport CheckReport::make(IdentityId id, std::string label, double residual, double tolerance,
                              std::optional<Witness> worst, std::string note) {
  CheckReport r;
  r.identity = id;
  r.label = std::move(label);
  r.max_residual = residual;
  r.tolerance = tolerance;
  r.passed = residual < tolerance;
  if (!r.passed) r.witness = worst ? std::move(worst) : Witness{{}, "residual above tolerance"};
  r.note = std::move(note);
  return r;
}

int levi_civita(int a, int b, int c) {
  if (a == 4 || b == 4 || c == 4) return 0;
  if (a == b || b == c || a == c) return 0;
  // parity of the permutation (a,b,c) of (1,2,3)
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

void ResidualTracker::observe(double residual, std::vector<int> indices, std::string description) {
  // NaN must register as a failure, so compare with !(<=).
  if (indices_.empty() || !(residual <= max_)) {
    max_ = std::isnan(residual) ? std::numeric_limits<double>::max() : std::max(max_, residual);
    indices_ = std::move(indices);
    description_ = std::move(description);
  }
}

CheckReport ResidualTracker::report(IdentityId id, std::string label, double tolerance,
                                    std::string note) const {
  return CheckReport::make(id, std::move(label), max_, tolerance, Witness{indices_, description_},
                           std::move(note));
}

std::vector<CheckReport> check_su2_fundamental(const GeneratorSet& j, const Tolerance& tol) {
  if (j.kind() != GeneratorKind::AngularMomentum) throw ShapeError("check_su2_fundamental needs angular-momentum generators");
  require(j, 3, "J");
  tol.validate();

  ResidualTracker comm;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const CMatrix rhs = combination(j, [&](int c) { return kI * double(levi_civita(a, b, c)); });
      comm.observe(frobenius_distance(commutator(j[a], j[b]), rhs), {a, b}, pair_text('J', a, 'J', b));
    }
  }
  std::vector<CheckReport> out;
  out.push_back(comm.report(IdentityId::Eq2, "[J,J] = i eps J", tol.abs_eps));

  const RepTag tag = j.rep().tag;
  if (tag == RepTag::Rep2 || tag == RepTag::SU3fund || tag == RepTag::SUNfund) {
    ResidualTracker anti;
    const CMatrix half = CMatrix::identity(j.dim()) * 0.5;
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        const CMatrix rhs = half * double(kronecker(a, b));
        anti.observe(frobenius_distance(anticommutator(j[a], j[b]), rhs), {a, b},
                     "{J" + std::to_string(a) + ",J" + std::to_string(b) + "}");
      }
    }
    out.push_back(anti.report(IdentityId::Eq3, "{J,J} = 1/2 delta 1", tol.abs_eps));
  }
  return out;
}

std::vector<CheckReport> check_lorentz(const GeneratorSet& j, const GeneratorSet& k, const Tolerance& tol) {
  require(j, 3, "J");
  require(k, 3, "K");
  require_same_dim(j, k);
  tol.validate();
  const IdentityId id = lorentz_id(j.rep().tag);
  const std::string rep(to_string(j.rep().tag));

  ResidualTracker jj, jk, kk;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      auto eps = [&](double scale) {
        return [=](int c) { return kI * (scale * levi_civita(a, b, c)); };
      };
      jj.observe(frobenius_distance(commutator(j[a], j[b]), combination(j, eps(1.0))), {a, b},
                 pair_text('J', a, 'J', b));
      jk.observe(frobenius_distance(commutator(j[a], k[b]), combination(k, eps(1.0))), {a, b},
                 pair_text('J', a, 'K', b));
      kk.observe(frobenius_distance(commutator(k[a], k[b]), combination(j, eps(-1.0))), {a, b},
                 pair_text('K', a, 'K', b));
    }
  }
  return {jj.report(id, "[J,J] = i eps J (" + rep + ")", tol.abs_eps),
          jk.report(id, "[J,K] = i eps K (" + rep + ")", tol.abs_eps),
          kk.report(id, "[K,K] = -i eps J (" + rep + ")", tol.abs_eps)};
}

CheckReport check_vector_rotation(const GeneratorSet& v, const GeneratorSet& j, IdentityId id,
                                  const Tolerance& tol) {
  require(v, 4, "V");
  require(j, 3, "J");
  require_same_dim(v, j);
  tol.validate();
  ResidualTracker t;
  for (int mu = 1; mu <= 4; ++mu) {
    for (int b = 1; b <= 3; ++b) {
      const CMatrix rhs = combination(v, [&](int k) { return kI * double(levi_civita(mu, b, k)); });
      t.observe(frobenius_distance(commutator(v[mu], j[b]), rhs), {mu, b}, pair_text('V', mu, 'J', b));
    }
  }
  return t.report(id, "[V,J] = i eps V (" + std::string(to_string(v.rep().tag)) + ")", tol.abs_eps);
}

namespace {

// Right-hand side coefficient of V^nu in [V^mu, K^j].
CScalar vk_coeff(int mu, int b, int nu, CScalar alpha) {
  return -kI * (alpha * double(kronecker(b, mu) * kronecker(4, nu)) +
                double(kronecker(b, nu) * kronecker(4, mu)) / alpha);
}

void observe_vk(ResidualTracker& t, const GeneratorSet& v, const GeneratorSet& k, CScalar alpha,
                int mu, int b) {
  const CMatrix rhs = combination(v, [&](int nu) { return vk_coeff(mu, b, nu, alpha); });
  t.observe(frobenius_distance(commutator(v[mu], k[b]), rhs), {mu, b}, pair_text('V', mu, 'K', b));
}

void require_alpha(CScalar alpha) {
  if (alpha == CScalar{}) throw ParamError("alpha must be nonzero");
}

}  // namespace

CheckReport check_vector_boost(const GeneratorSet& v, const GeneratorSet& k, CScalar alpha,
                               IdentityId id, const Tolerance& tol) {
  require(v, 4, "V");
  require(k, 3, "K");
  require_same_dim(v, k);
  require_alpha(alpha);
  tol.validate();
  ResidualTracker t;
  for (int mu = 1; mu <= 4; ++mu)
    for (int b = 1; b <= 3; ++b) observe_vk(t, v, k, alpha, mu, b);
  return t.report(id, "[V,K] = -i(alpha d d + d d/alpha) V", tol.abs_eps);
}

CheckReport check_spatial_vector_boost(const GeneratorSet& v, const GeneratorSet& k, CScalar alpha,
                                       const Tolerance& tol) {
  require(v, 4, "V");
  require(k, 3, "K");
  require_same_dim(v, k);
  require_alpha(alpha);
  tol.validate();
  ResidualTracker t;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) observe_vk(t, v, k, alpha, a, b);
  return t.report(IdentityId::Eq13, "[V^i,K^j] = -i delta_ij alpha V^4", tol.abs_eps);
}

CheckReport check_time_vector_boost(const GeneratorSet& v, const GeneratorSet& k, CScalar alpha,
                                    const Tolerance& tol) {
  require(v, 4, "V");
  require(k, 3, "K");
  require_same_dim(v, k);
  require_alpha(alpha);
  tol.validate();
  ResidualTracker t;
  for (int b = 1; b <= 3; ++b) observe_vk(t, v, k, alpha, 4, b);
  return t.report(IdentityId::Eq15, "[V^4,K^j] = -(i/alpha) V^j", tol.abs_eps);
}

CheckReport check_vk_block_form(const GeneratorSet& v, const GeneratorSet& k, const VectorParams& p,
                                const Tolerance& tol) {
  require(v, 4, "V");
  require(k, 3, "K");
  require_same_dim(v, k);
  if (v.dim() != 4) throw ShapeError("block form applies to the 4-dimensional (2+2) rep");
  tol.validate();
  CMatrix block(4);
  const CMatrix one = CMatrix::identity(2);
  block.set_block(0, 2, one * (p.c_plus * 0.5));
  block.set_block(2, 0, one * (-p.c_minus * 0.5));
  ResidualTracker t;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const CMatrix rhs = block * (-kI * double(kronecker(a, b)));
      t.observe(frobenius_distance(commutator(v[a], k[b]), rhs), {a, b}, pair_text('V', a, 'K', b));
    }
  }
  return t.report(IdentityId::Eq12, "[V^i,K^j] = -i delta_ij [[0,c+/2],[-c-/2,0]]", tol.abs_eps);
}

CheckReport check_momentum_commute(const GeneratorSet& p, IdentityId id, const Tolerance& tol) {
  require(p, 4, "P");
  tol.validate();
  ResidualTracker t;
  const CMatrix zero(p.dim());
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      t.observe(frobenius_distance(commutator(p[a], p[b]), zero), {a, b}, pair_text('P', a, 'P', b));
  return t.report(id, "[P,P] = 0", tol.abs_eps);
}

std::vector<CheckReport> check_poincare(const GeneratorSet& j, const GeneratorSet& k,
                                        const GeneratorSet& v, CScalar alpha, const Tolerance& tol) {
  require(v, 4, "V");
  require_same_dim(j, v);
  auto out = check_lorentz(j, k, tol);
  for (auto& r : out) r.identity = IdentityId::Eq18;
  out.push_back(check_vector_rotation(v, j, IdentityId::Eq19, tol));
  out.push_back(check_vector_boost(v, k, alpha, IdentityId::Eq19, tol));
  out.push_back(check_momentum_commute(v, IdentityId::Eq20, tol));
  if (v.kind() != GeneratorKind::Momentum) out.back().note = "V is not labeled as a momentum set";
  return out;
}

CheckReport check_2rep_vk_asymmetry(const Tolerance& tol) {
  tol.validate();
  const auto v = v2(1.0, 1.0);
  const auto k = k2();
  double symmetric = 0.0, diagonal = 0.0, smallest_antisym = std::numeric_limits<double>::max();
  Witness worst{{}, ""};
  for (int a = 1; a <= 3; ++a) {
    diagonal = std::max(diagonal, frobenius_norm(commutator(v[a], k[a])));
    for (int b = a + 1; b <= 3; ++b) {
      const CMatrix ab = commutator(v[a], k[b]);
      const CMatrix ba = commutator(v[b], k[a]);
      const double sym = frobenius_norm(ab + ba);
      if (sym >= symmetric) {
        symmetric = sym;
        worst = Witness{{a, b}, pair_text('V', a, 'K', b) + " + " + pair_text('V', b, 'K', a)};
      }
      smallest_antisym = std::min(smallest_antisym, frobenius_norm(ab));
    }
  }
  double residual = std::max(symmetric, diagonal);
  std::string note = "symmetric part " + std::to_string(symmetric) + ", diagonal " +
                     std::to_string(diagonal) + ", smallest off-diagonal |[V^i,K^j]| " +
                     std::to_string(smallest_antisym) +
                     "; the Poincare form -i delta_ij alpha V^4 needs a nonzero diagonal";
  if (!(smallest_antisym > tol.abs_eps)) {
    // An all-zero commutator would not demonstrate antisymmetry.
    residual = 1.0;
    worst = Witness{{}, "[V^i,K^j] vanishes identically"};
  }
  return CheckReport::make(IdentityId::Eq7, "2-rep [V^i,K^j] antisymmetric (no Poincare closure)",
                           residual, tol.abs_eps, worst, std::move(note));
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace lieforge
