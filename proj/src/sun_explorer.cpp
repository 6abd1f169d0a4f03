#include "lieforge/sun_explorer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace lieforge {

namespace {

std::size_t idx(std::size_t count, std::size_t a, std::size_t b, std::size_t c) { return (a * count + b) * count + c; }

}  // namespace

double StructureTensors::f_at(std::size_t a, std::size_t b, std::size_t c) const {
  if (a < 1 || b < 1 || c < 1 || a > count || b > count || c > count) throw IndexError("structure index out of range");
  return f[idx(count, a - 1, b - 1, c - 1)];
}

double StructureTensors::d_at(std::size_t a, std::size_t b, std::size_t c) const {
  if (a < 1 || b < 1 || c < 1 || a > count || b > count || c > count) throw IndexError("structure index out of range");
  return d[idx(count, a - 1, b - 1, c - 1)];
}

std::vector<CMatrix> sun_lambdas(std::size_t n) {
  if (n < 2) throw ParamError("SU(N) needs N >= 2");
  std::vector<CMatrix> out;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      CMatrix s(n), a(n);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      a(j, k) = -kI;
      a(k, j) = kI;
      out.push_back(s);
      out.push_back(a);
    }
    CMatrix diag(n);
    const double l = static_cast<double>(k);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (std::size_t j = 0; j < k; ++j) diag(j, j) = norm;
    diag(k, k) = -l * norm;
    out.push_back(diag);
  }
  return out;
}

std::vector<CMatrix> gell_mann() { return sun_lambdas(3); }

GeneratorSet sun_generators(std::size_t n) {
  std::vector<CMatrix> members;
  for (const auto& l : sun_lambdas(n)) members.push_back(l * 0.5);
  const RepLabel rep = n == 2 ? RepLabel::of(RepTag::Rep2)
                       : n == 3 ? RepLabel::of(RepTag::SU3fund)
                                : RepLabel::make(RepTag::SUNfund, n);
  return GeneratorSet(rep, GeneratorKind::AngularMomentum, std::move(members));
}

StructureTensors extract_structure(const std::vector<CMatrix>& gens, const Tolerance& tol) {
  tol.validate();
  if (gens.empty()) throw BasisError("extract_structure: no generators");
  const std::size_t m = gens.size();
  const std::size_t n = gens.front().dim();

  std::vector<double> kappa(m);
  for (std::size_t a = 0; a < m; ++a) {
    if (gens[a].dim() != n) throw BasisError("extract_structure: generators differ in dimension");
    if (frobenius_distance(gens[a], gens[a].adjoint()) > tol.abs_eps)
      throw BasisError("extract_structure: generator " + std::to_string(a + 1) + " is not hermitian");
    if (std::abs(gens[a].trace()) > tol.abs_eps)
      throw BasisError("extract_structure: generator " + std::to_string(a + 1) + " is not traceless");
    kappa[a] = (gens[a] * gens[a]).trace().real();
    if (kappa[a] <= tol.abs_eps) throw BasisError("extract_structure: generator " + std::to_string(a + 1) + " vanishes");
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (std::abs((gens[a] * gens[b]).trace()) > tol.abs_eps * std::sqrt(kappa[a] * kappa[b])) {
        throw BasisError("extract_structure: generators " + std::to_string(a + 1) + " and " +
                         std::to_string(b + 1) + " are not trace-orthogonal");
      }
    }
  }

  StructureTensors st;
  st.n = n;
  st.count = m;
  st.f.assign(m * m * m, 0.0);
  st.d.assign(m * m * m, 0.0);
  std::vector<CMatrix> comm, anti;
  comm.reserve(m * m);
  anti.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      comm.push_back(commutator(gens[a], gens[b]));
      anti.push_back(anticommutator(gens[a], gens[b]));
      for (std::size_t c = 0; c < m; ++c) {
        st.f[idx(m, a, b, c)] = (-kI * (comm.back() * gens[c]).trace()).real() / kappa[c];
        st.d[idx(m, a, b, c)] = (anti.back() * gens[c]).trace().real() / kappa[c];
      }
    }
  }

  // Tracing {J^a, J^a} = delta_coeff 1 + d^{aac} J^c with traceless J^c gives
  // delta_coeff = tr({J^a, J^a}) / N; all a agree for a normalized basis.
  double delta_sum = 0.0;
  for (std::size_t a = 0; a < m; ++a) delta_sum += anti[a * m + a].trace().real() / static_cast<double>(n);
  st.delta_coeff = delta_sum / static_cast<double>(m);

  const CMatrix one = CMatrix::identity(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      CMatrix cr = comm[a * m + b];
      CMatrix ar = anti[a * m + b];
      if (a == b) ar -= one * st.delta_coeff;
      for (std::size_t c = 0; c < m; ++c) {
        cr -= gens[c] * (kI * st.f[idx(m, a, b, c)]);
        ar -= gens[c] * st.d[idx(m, a, b, c)];
      }
      st.commutator_residual = std::max(st.commutator_residual, frobenius_norm(cr));
      st.anticommutator_residual = std::max(st.anticommutator_residual, frobenius_norm(ar));
    }
  }
  return st;
}

GeneratorSet adjoint_from_f(const StructureTensors& st) {
  const std::size_t m = st.count;
  std::vector<CMatrix> members;
  for (std::size_t a = 0; a < m; ++a) {
    CMatrix adj(m);
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) adj(b, c) = kI * st.f[idx(m, b, a, c)];
    members.push_back(adj);
  }
  const RepLabel rep = (st.n == 3 && m == 8) ? RepLabel::of(RepTag::SU3adjoint) : RepLabel::make(RepTag::SUNadjoint, m);
  return GeneratorSet(rep, GeneratorKind::AngularMomentum, std::move(members));
}

double f_algebra_residual(const std::vector<CMatrix>& family, const StructureTensors& st) {
  const std::size_t m = st.count;
  if (family.size() != m) throw ShapeError("family size does not match the structure tensors");
  double worst = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      CMatrix r = commutator(family[a], family[b]);
      for (std::size_t c = 0; c < m; ++c) {
        const double fc = st.f[idx(m, a, b, c)];
        if (fc != 0.0) r -= family[c] * (kI * fc);
      }
      worst = std::max(worst, frobenius_norm(r));
    }
  }
  return worst;
}

ObstructionReport boost_obstruction_report(const StructureTensors& st, const Tolerance& tol) {
  ObstructionReport r;
  r.n = st.n;
  r.delta_coeff = st.delta_coeff;
  const std::size_t m = st.count;
  bool first = true;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        const double v = std::abs(st.d[idx(m, a, b, c)]);
        // ties (up to abs_eps) keep the lexicographically first triple
        if (first || v > r.max_abs_d + tol.abs_eps) {
          r.max_abs_d = v;
          r.argmax = {a + 1, b + 1, c + 1};
          first = false;
        }
      }
    }
  }
  r.obstructed = r.max_abs_d > tol.abs_eps;

  std::ostringstream os;
  os.precision(12);
  os << "SU(" << st.n << "): {J^a,J^b} = " << st.delta_coeff << " delta^{ab} 1";
  if (r.obstructed) {
    os << " + d^{abc} J^c with max|d| = " << r.max_abs_d << " at (" << r.argmax[0] << "," << r.argmax[1] << ","
       << r.argmax[2] << "). The anticommutator is not proportional to the unit matrix, so [V^i,K^j] does not "
       << "reduce to -i delta_ij alpha V^4 and the boost construction does not go through.";
  } else {
    os << " exactly (d = 0). [V^i,K^j] reduces to -i delta_ij alpha V^4 and the boost construction goes through.";
  }
  if (st.n >= 3) os << " Adjoint rotation generators are the " << m << "x" << m << " block; the singlet is zero and omitted.";
  r.statement = os.str();
  return r;
}

}  // namespace lieforge
