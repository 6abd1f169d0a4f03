#include "lieforge/spacetime.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "lieforge/rep_transfer.hpp"

namespace lieforge {

namespace {

CMatrix generator_combination(const GeneratorSet& s, const std::array<double, 3>& w) {
  CMatrix out(s.dim());
  for (int i = 1; i <= 3; ++i) out += s[i] * (kI * w[i - 1]);
  return out;
}

std::array<double, 3> negated(std::array<double, 3> w) {
  for (auto& v : w) v = -v;
  return w;
}

double spatial_sq(const FourVector& x) { return x[1] * x[1] + x[2] * x[2] + x[3] * x[3]; }
double euclid_sq(const FourVector& x) { return spatial_sq(x) + x[4] * x[4]; }

std::string format_vector(const FourVector& x) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << x[1] << ", " << x[2] << ", " << x[3] << ", " << x[4] << ")";
  return os.str();
}

}  // namespace

CMatrix lorentz_transform(const GeneratorSet& j, const GeneratorSet& k, const RotBoostParams& params,
                          const Tolerance& tol) {
  if (j.size() != 3 || k.size() != 3 || j.dim() != k.dim()) throw ShapeError("lorentz_transform needs matching J, K triples");
  return mat_exp(generator_combination(k, params.phi), tol) * mat_exp(generator_combination(j, params.theta), tol);
}

CMatrix d4(const RotBoostParams& params, const Tolerance& tol) {
  return lorentz_transform(build_j4(), build_k4(), params, tol);
}

FourVector apply(const CMatrix& d, const FourVector& x, const Tolerance& tol) {
  if (d.dim() != 4) throw DimError("apply needs a 4x4 transform");
  FourVector out;
  double imag = 0.0;
  for (int mu = 1; mu <= 4; ++mu) {
    CScalar s{};
    for (int nu = 1; nu <= 4; ++nu) s += d(mu - 1, nu - 1) * x[nu];
    out[mu] = s.real();
    imag = std::max(imag, std::abs(s.imag()));
  }
  if (imag > tol.exp_eps * std::max(1.0, std::sqrt(euclid_sq(x)))) {
    throw PurityError("transform produced an imaginary component of size " + std::to_string(imag));
  }
  return out;
}

double interval_sq(const FourVector& x) { return spatial_sq(x) - x[4] * x[4]; }

double interval_sq_via_det(const FourVector& x) {
  CMatrix m(2);
  for (int mu = 1; mu <= 4; ++mu) m += pauli(mu) * x[mu];
  return -det(m).real();
}

CMatrix AffineTransform::to_matrix() const {
  if (lambda.dim() != 4) throw DimError("affine lambda must be 4x4");
  CMatrix m(5);
  m.set_block(0, 0, lambda);
  for (int mu = 1; mu <= 4; ++mu) m(mu - 1, 4) = a[mu];
  m(4, 4) = 1.0;
  return m;
}

AffineTransform AffineTransform::compose(const AffineTransform& first) const {
  AffineTransform out;
  out.lambda = lambda * first.lambda;
  for (int mu = 1; mu <= 4; ++mu) {
    CScalar s = a[mu];
    for (int nu = 1; nu <= 4; ++nu) s += lambda(mu - 1, nu - 1) * first.a[nu];
    if (std::abs(s.imag()) > Tolerance{}.exp_eps * std::max(1.0, std::abs(s)))
      throw PurityError("composed displacement is not real");
    out.a[mu] = s.real();
  }
  return out;
}

FourVector affine_apply(const AffineTransform& t, const FourVector& x, const Tolerance& tol) {
  const CMatrix m = t.to_matrix();
  std::array<CScalar, 5> in{x[1], x[2], x[3], x[4], 1.0};
  std::array<CScalar, 5> res{};
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) res[r] += m(r, c) * in[c];
  if (res[4] != CScalar(1.0)) throw PurityError("append-one component did not return 1");
  FourVector out;
  double imag = 0.0;
  for (int mu = 1; mu <= 4; ++mu) {
    out[mu] = res[mu - 1].real();
    imag = std::max(imag, std::abs(res[mu - 1].imag()));
  }
  if (imag > tol.exp_eps * std::max(1.0, std::sqrt(euclid_sq(x)))) throw PurityError("affine transform is not real");
  return out;
}

AffineGenerators affine_generators() {
  const auto j4 = build_j4();
  const auto k4 = build_k4();
  const auto rep = RepLabel::of(RepTag::Rep5affine);
  std::vector<CMatrix> jm, km, pm;
  for (int i = 1; i <= 3; ++i) {
    CMatrix j(5), k(5);
    j.set_block(0, 0, j4[i]);
    k.set_block(0, 0, k4[i]);
    jm.push_back(j);
    km.push_back(k);
  }
  for (int mu = 1; mu <= 4; ++mu) pm.push_back(CMatrix::unit(5, mu - 1, 4) * (-kI * kMetric[mu - 1]));
  return {GeneratorSet(rep, GeneratorKind::AngularMomentum, std::move(jm)),
          GeneratorSet(rep, GeneratorKind::Boost, std::move(km)),
          GeneratorSet(rep, GeneratorKind::Momentum, std::move(pm))};
}

CMatrix translation_exponential(const FourVector& a, const Tolerance& tol) {
  const auto gens = affine_generators();
  CMatrix arg(5);
  for (int mu = 1; mu <= 4; ++mu) arg += gens.p5[mu] * (kI * kMetric[mu - 1] * a[mu]);
  return mat_exp(arg, tol);
}

CheckReport intertwine_check(const GeneratorSet& j, const GeneratorSet& k, const GeneratorSet& v,
                             const RotBoostParams& params, const Tolerance& tol) {
  tol.validate();
  auto pre = check_lorentz(j, k, tol);
  pre.push_back(check_vector_rotation(v, j, IdentityId::Eq19, tol));
  pre.push_back(check_vector_boost(v, k, 1.0, IdentityId::Eq19, tol));
  for (const auto& r : pre) {
    if (!r.passed) {
      throw PrecondError("intertwine_check: generators fail " + r.label + " (residual " +
                         std::to_string(r.max_residual) + ")");
    }
  }

  const CMatrix d = lorentz_transform(j, k, params, tol);
  const CMatrix d_inv = mat_exp(generator_combination(j, negated(params.theta)), tol) *
                        mat_exp(generator_combination(k, negated(params.phi)), tol);
  const CMatrix lambda = d4(params, tol);

  ResidualTracker t;
  for (int mu = 1; mu <= 4; ++mu) {
    CMatrix rhs(v.dim());
    for (int nu = 1; nu <= 4; ++nu) {
      // (g Lambda^T g)_{mu nu}
      const CScalar coeff = kMetric[mu - 1] * lambda(nu - 1, mu - 1) * kMetric[nu - 1];
      rhs += v[nu] * coeff;
    }
    t.observe(frobenius_distance(d * v[mu] * d_inv, rhs), {mu}, "D V^" + std::to_string(mu) + " D^-1");
  }
  return t.report(IdentityId::Ex6, "D V D^-1 = Lambda_nu^mu V^nu (" + std::string(to_string(v.rep().tag)) + ")",
                  tol.exp_eps);
}

double SeededRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

FourVector SeededRng::four_vector(double scale) {
  FourVector x;
  for (int mu = 1; mu <= 4; ++mu) x[mu] = uniform(-scale, scale);
  return x;
}

RotBoostParams SeededRng::rot_boost(double max_rapidity) {
  RotBoostParams p;
  for (auto& t : p.theta) t = uniform(-std::numbers::pi, std::numbers::pi);
  std::array<double, 3> dir{};
  double norm = 0.0;
  do {
    for (auto& c : dir) c = uniform(-1.0, 1.0);
    norm = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
  } while (norm < 1e-3);
  const double r = uniform(0.0, max_rapidity);
  for (int i = 0; i < 3; ++i) p.phi[i] = r * dir[i] / norm;
  return p;
}

CheckReport rotation_invariance_check(std::uint32_t trials, std::uint64_t seed, const Tolerance& tol) {
  if (trials < 1) throw ParamError("trials must be >= 1");
  tol.validate();
  SeededRng rng(seed);
  ResidualTracker t;
  std::string detail;
  for (std::uint32_t n = 0; n < trials; ++n) {
    const FourVector x = rng.four_vector(10.0);
    RotBoostParams p = rng.rot_boost(0.0);
    p.phi = {};
    const FourVector xr = apply(d4(p, tol), x, tol);
    const double scale = std::max(1.0, euclid_sq(x));
    const double err = std::max(std::abs(spatial_sq(xr) - spatial_sq(x)) / scale,
                                std::abs(xr[4] - x[4]) / std::sqrt(scale));
    t.observe(err, {static_cast<int>(n)}, "trial " + std::to_string(n) + " x=" + format_vector(x));
    if (n == 0) {
      detail = "trial 0: x=" + format_vector(x) + " -> " + format_vector(xr) + ", |x_spatial|^2 " +
               std::to_string(spatial_sq(x)) + " -> " + std::to_string(spatial_sq(xr));
    }
  }
  return t.report(IdentityId::Eq27, "rotation preserves x^i x^i and x^4 (" + std::to_string(trials) +
                                        " trials, seed " + std::to_string(seed) + ")",
                  tol.exp_eps, detail);
}

CheckReport boost_invariance_check(std::uint32_t trials, std::uint64_t seed, const Tolerance& tol) {
  if (trials < 1) throw ParamError("trials must be >= 1");
  tol.validate();
  SeededRng rng(seed);
  ResidualTracker t;
  std::string detail;
  for (std::uint32_t n = 0; n < trials; ++n) {
    const FourVector x = rng.four_vector(10.0);
    const RotBoostParams p = rng.rot_boost(3.0);
    const FourVector xb = apply(d4(p, tol), x, tol);
    const double err = std::abs(interval_sq(xb) - interval_sq(x)) / std::max(1.0, euclid_sq(x));
    t.observe(err, {static_cast<int>(n)}, "trial " + std::to_string(n) + " x=" + format_vector(x));
    if (n == 0) {
      detail = "trial 0: x=" + format_vector(x) + " -> " + format_vector(xb) + ", interval " +
               std::to_string(interval_sq(x)) + " -> " + std::to_string(interval_sq(xb));
    }
  }
  return t.report(IdentityId::Eq29, "D4(theta,phi) preserves x^i x^i - x^4 x^4 (" + std::to_string(trials) +
                                        " trials, seed " + std::to_string(seed) + ", |phi| <= 3)",
                  tol.exp_eps, detail);
}

}  // namespace lieforge
