#include "lieforge/lieforge.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "lieforge/suites.hpp"

using namespace lieforge;

struct lf_matrix {
  CMatrix m;
};
struct lf_genset {
  GeneratorSet g;
};
struct lf_reports {
  SuiteResult result;
  std::vector<std::string> witnesses;
  std::vector<std::string> identities;
  std::vector<std::string> artifact_json;
};

namespace {

thread_local std::string g_last_error;

lf_status status_of(const Error& e) {
  const std::string code = e.code();
  if (code == "DimError") return LF_ERR_DIM;
  if (code == "IndexError") return LF_ERR_INDEX;
  if (code == "ParamError") return LF_ERR_PARAM;
  if (code == "BasisError") return LF_ERR_BASIS;
  if (code == "ShapeError") return LF_ERR_SHAPE;
  if (code == "NotVClosedError") return LF_ERR_NOT_V_CLOSED;
  if (code == "InconsistentBlocksError") return LF_ERR_INCONSISTENT_BLOCKS;
  if (code == "PurityError") return LF_ERR_PURITY;
  if (code == "PrecondError") return LF_ERR_PRECOND;
  if (code == "ParseError") return LF_ERR_PARSE;
  return LF_ERR_INTERNAL;
}

lf_status fail(lf_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class F>
lf_status wrap(F&& f) {
  try {
    g_last_error.clear();
    f();
    return LF_OK;
  } catch (const Error& e) {
    return fail(status_of(e), e.what());
  } catch (const json::exception& e) {
    return fail(LF_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(LF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LF_ERR_INTERNAL, "unknown error");
  }
}

#define LF_REQUIRE(ptr)                                                    \
  do {                                                                     \
    if (!(ptr)) return fail(LF_ERR_NULL_ARG, #ptr " must not be NULL");    \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

FourVector to_four(const double x[4]) { return FourVector{{x[0], x[1], x[2], x[3]}}; }

lf_status new_matrix(CMatrix m, lf_matrix** out) {
  *out = new lf_matrix{std::move(m)};
  return LF_OK;
}

}  // namespace

extern "C" {

const char* lf_last_error(void) { return g_last_error.c_str(); }

const char* lf_status_name(lf_status s) {
  switch (s) {
    case LF_OK: return "OK";
    case LF_ERR_DIM: return "DimError";
    case LF_ERR_INDEX: return "IndexError";
    case LF_ERR_PARAM: return "ParamError";
    case LF_ERR_BASIS: return "BasisError";
    case LF_ERR_SHAPE: return "ShapeError";
    case LF_ERR_NOT_V_CLOSED: return "NotVClosedError";
    case LF_ERR_INCONSISTENT_BLOCKS: return "InconsistentBlocksError";
    case LF_ERR_PURITY: return "PurityError";
    case LF_ERR_PRECOND: return "PrecondError";
    case LF_ERR_NULL_ARG: return "NullArgument";
    case LF_ERR_PARSE: return "ParseError";
    case LF_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

void lf_string_free(char* s) { std::free(s); }

lf_status lf_matrix_create(size_t dim, lf_matrix** out) {
  LF_REQUIRE(out);
  return wrap([&] { new_matrix(CMatrix(dim), out); });
}

lf_status lf_matrix_from_json(const char* text, lf_matrix** out) {
  LF_REQUIRE(text);
  LF_REQUIRE(out);
  return wrap([&] { new_matrix(matrix_from_json(json::parse(text)), out); });
}

lf_status lf_matrix_to_json(const lf_matrix* m, char** out) {
  LF_REQUIRE(m);
  LF_REQUIRE(out);
  return wrap([&] { *out = dup_string(to_json(m->m).dump()); });
}

lf_status lf_matrix_dim(const lf_matrix* m, size_t* out) {
  LF_REQUIRE(m);
  LF_REQUIRE(out);
  *out = m->m.dim();
  return LF_OK;
}

lf_status lf_matrix_get(const lf_matrix* m, size_t row, size_t col, double* re, double* im) {
  LF_REQUIRE(m);
  LF_REQUIRE(re);
  LF_REQUIRE(im);
  return wrap([&] {
    if (row >= m->m.dim() || col >= m->m.dim()) throw IndexError("matrix index out of range");
    *re = m->m(row, col).real();
    *im = m->m(row, col).imag();
  });
}

lf_status lf_matrix_set(lf_matrix* m, size_t row, size_t col, double re, double im) {
  LF_REQUIRE(m);
  return wrap([&] { m->m.set(row, col, {re, im}); });
}

void lf_matrix_free(lf_matrix* m) { delete m; }

lf_status lf_commutator(const lf_matrix* a, const lf_matrix* b, lf_matrix** out) {
  LF_REQUIRE(a);
  LF_REQUIRE(b);
  LF_REQUIRE(out);
  return wrap([&] { new_matrix(commutator(a->m, b->m), out); });
}

lf_status lf_anticommutator(const lf_matrix* a, const lf_matrix* b, lf_matrix** out) {
  LF_REQUIRE(a);
  LF_REQUIRE(b);
  LF_REQUIRE(out);
  return wrap([&] { new_matrix(anticommutator(a->m, b->m), out); });
}

lf_status lf_mat_exp(const lf_matrix* a, double exp_eps, lf_matrix** out) {
  LF_REQUIRE(a);
  LF_REQUIRE(out);
  return wrap([&] {
    Tolerance tol;
    tol.exp_eps = exp_eps;
    new_matrix(mat_exp(a->m, tol), out);
  });
}

lf_status lf_det(const lf_matrix* a, double* re, double* im) {
  LF_REQUIRE(a);
  LF_REQUIRE(re);
  LF_REQUIRE(im);
  return wrap([&] {
    const CScalar d = det(a->m);
    *re = d.real();
    *im = d.imag();
  });
}

lf_status lf_frobenius_distance(const lf_matrix* a, const lf_matrix* b, double* out) {
  LF_REQUIRE(a);
  LF_REQUIRE(b);
  LF_REQUIRE(out);
  return wrap([&] { *out = frobenius_distance(a->m, b->m); });
}

lf_status lf_genset_builtin(const char* name, double alpha, lf_genset** out) {
  LF_REQUIRE(name);
  LF_REQUIRE(out);
  return wrap([&] {
    const std::string n = name;
    if (alpha == 0.0) throw ParamError("alpha must be nonzero");
    const VectorParams p{{0.0, -2.0}, {0.0, 2.0}, alpha};
    auto make = [&]() -> GeneratorSet {
      if (n == "J2") return j2();
      if (n == "K2") return k2();
      if (n == "V2") return v2(1.0, 1.0);
      if (n == "J22") return rep22_jk().first;
      if (n == "K22") return rep22_jk().second;
      if (n == "V22") return rep22_v(p);
      if (n == "gamma") return gamma();
      if (n == "P+") return momentum({p.c_plus, 0.0, p.alpha}, MomentumBranch::Plus);
      if (n == "P-") return momentum({0.0, p.c_minus, p.alpha}, MomentumBranch::Minus);
      if (n == "J4") return build_j4();
      if (n == "K4") return build_k4();
      if (n == "J5") return affine_generators().j5;
      if (n == "K5") return affine_generators().k5;
      if (n == "P5") return affine_generators().p5;
      if (n == "SU3") return sun_generators(3);
      throw ParamError("unknown generator set '" + n + "'");
    };
    *out = new lf_genset{make()};
  });
}

lf_status lf_genset_from_json(const char* text, lf_genset** out) {
  LF_REQUIRE(text);
  LF_REQUIRE(out);
  return wrap([&] { *out = new lf_genset{generator_set_from_json(json::parse(text))}; });
}

lf_status lf_genset_size(const lf_genset* g, size_t* out) {
  LF_REQUIRE(g);
  LF_REQUIRE(out);
  *out = g->g.size();
  return LF_OK;
}

lf_status lf_genset_member(const lf_genset* g, size_t index, lf_matrix** out) {
  LF_REQUIRE(g);
  LF_REQUIRE(out);
  return wrap([&] { new_matrix(g->g[index], out); });
}

lf_status lf_genset_to_json(const lf_genset* g, char** out) {
  LF_REQUIRE(g);
  LF_REQUIRE(out);
  return wrap([&] { *out = dup_string(to_json(g->g).dump()); });
}

void lf_genset_free(lf_genset* g) { delete g; }

lf_status lf_d4(const double theta[3], const double phi[3], lf_matrix** out) {
  LF_REQUIRE(theta);
  LF_REQUIRE(phi);
  LF_REQUIRE(out);
  return wrap([&] {
    RotBoostParams p;
    for (int i = 0; i < 3; ++i) {
      p.theta[i] = theta[i];
      p.phi[i] = phi[i];
    }
    new_matrix(d4(p), out);
  });
}

lf_status lf_apply(const lf_matrix* d, const double x[4], double out[4]) {
  LF_REQUIRE(d);
  LF_REQUIRE(x);
  LF_REQUIRE(out);
  return wrap([&] {
    const FourVector y = apply(d->m, to_four(x));
    for (int i = 0; i < 4; ++i) out[i] = y[i + 1];
  });
}

lf_status lf_interval_sq(const double x[4], double* out) {
  LF_REQUIRE(x);
  LF_REQUIRE(out);
  return wrap([&] { *out = interval_sq(to_four(x)); });
}

lf_status lf_interval_sq_via_det(const double x[4], double* out) {
  LF_REQUIRE(x);
  LF_REQUIRE(out);
  return wrap([&] { *out = interval_sq_via_det(to_four(x)); });
}

lf_config lf_config_default(void) {
  const SuiteConfig d;
  return lf_config{d.seed, d.trials, d.alpha, d.tol.abs_eps, d.tol.exp_eps, nullptr};
}

lf_status lf_run_suite(const char* suite, const lf_config* cfg, lf_reports** out) {
  LF_REQUIRE(suite);
  LF_REQUIRE(out);
  return wrap([&] {
    const lf_config c = cfg ? *cfg : lf_config_default();
    SuiteConfig sc;
    sc.seed = c.seed;
    sc.trials = c.trials;
    sc.alpha = c.alpha;
    sc.tol.abs_eps = c.abs_eps;
    sc.tol.exp_eps = c.exp_eps;
    if (c.perturb && *c.perturb) sc.perturb = Perturbation::parse(c.perturb);
    auto r = std::make_unique<lf_reports>();
    r->result = run_suite(suite, sc);
    for (const auto& rep : r->result.reports) {
      r->identities.emplace_back(to_string(rep.identity));
      r->witnesses.push_back(rep.witness ? rep.witness->description : std::string{});
    }
    for (const auto& a : r->result.artifacts) r->artifact_json.push_back(a.data.dump());
    *out = r.release();
  });
}

size_t lf_reports_count(const lf_reports* r) { return r ? r->result.reports.size() : 0; }

lf_status lf_reports_get(const lf_reports* r, size_t index, lf_report_view* out) {
  LF_REQUIRE(r);
  LF_REQUIRE(out);
  if (index >= r->result.reports.size()) return fail(LF_ERR_INDEX, "report index out of range");
  const auto& rep = r->result.reports[index];
  *out = lf_report_view{r->identities[index].c_str(),
                        rep.label.c_str(),
                        rep.max_residual,
                        rep.tolerance,
                        rep.passed ? 1 : 0,
                        rep.witness ? r->witnesses[index].c_str() : nullptr,
                        rep.note.c_str()};
  return LF_OK;
}

int lf_reports_all_passed(const lf_reports* r) { return r && r->result.all_passed() ? 1 : 0; }

lf_status lf_reports_to_jsonl(const lf_reports* r, char** out) {
  LF_REQUIRE(r);
  LF_REQUIRE(out);
  return wrap([&] {
    std::string s;
    for (const auto& rep : r->result.reports) s += to_json(rep).dump() + "\n";
    *out = dup_string(s);
  });
}

size_t lf_reports_artifact_count(const lf_reports* r) { return r ? r->result.artifacts.size() : 0; }

lf_status lf_reports_artifact(const lf_reports* r, size_t index, const char** name, const char** json_text,
                              const char** text) {
  LF_REQUIRE(r);
  if (index >= r->result.artifacts.size()) return fail(LF_ERR_INDEX, "artifact index out of range");
  const auto& a = r->result.artifacts[index];
  if (name) *name = a.name.c_str();
  if (json_text) *json_text = r->artifact_json[index].c_str();
  if (text) *text = a.text.c_str();
  return LF_OK;
}

void lf_reports_free(lf_reports* r) { delete r; }

}  // extern "C"
