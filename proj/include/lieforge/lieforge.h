#ifndef LIEFORGE_H
#define LIEFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LIEFORGE_BUILDING)
#    define LF_API __declspec(dllexport)
#  else
#    define LF_API __declspec(dllimport)
#  endif
#else
#  define LF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lf_status {
  LF_OK = 0,
  LF_ERR_DIM,
  LF_ERR_INDEX,
  LF_ERR_PARAM,
  LF_ERR_BASIS,
  LF_ERR_SHAPE,
  LF_ERR_NOT_V_CLOSED,
  LF_ERR_INCONSISTENT_BLOCKS,
  LF_ERR_PURITY,
  LF_ERR_PRECOND,
  LF_ERR_NULL_ARG,
  LF_ERR_PARSE,
  LF_ERR_INTERNAL
} lf_status;

typedef struct lf_matrix lf_matrix;
typedef struct lf_genset lf_genset;
typedef struct lf_reports lf_reports;

/* Message of the most recent failure on this thread; never NULL. */
LF_API const char* lf_last_error(void);
LF_API const char* lf_status_name(lf_status s);
/* Frees strings returned through char** out-parameters. */
LF_API void lf_string_free(char* s);

/* ---- matrices (indices are 0-based) ---- */
LF_API lf_status lf_matrix_create(size_t dim, lf_matrix** out);
LF_API lf_status lf_matrix_from_json(const char* text, lf_matrix** out);
LF_API lf_status lf_matrix_to_json(const lf_matrix* m, char** out);
LF_API lf_status lf_matrix_dim(const lf_matrix* m, size_t* out);
LF_API lf_status lf_matrix_get(const lf_matrix* m, size_t row, size_t col, double* re, double* im);
LF_API lf_status lf_matrix_set(lf_matrix* m, size_t row, size_t col, double re, double im);
LF_API void lf_matrix_free(lf_matrix* m);

LF_API lf_status lf_commutator(const lf_matrix* a, const lf_matrix* b, lf_matrix** out);
LF_API lf_status lf_anticommutator(const lf_matrix* a, const lf_matrix* b, lf_matrix** out);
LF_API lf_status lf_mat_exp(const lf_matrix* a, double exp_eps, lf_matrix** out);
LF_API lf_status lf_det(const lf_matrix* a, double* re, double* im);
LF_API lf_status lf_frobenius_distance(const lf_matrix* a, const lf_matrix* b, double* out);

/* ---- generator sets (members are 1-based) ---- */
/* name: J2 K2 V2 J22 K22 V22 gamma P+ P- J4 K4 J5 K5 P5 SU3. alpha applies
   to V22, P+ and P-; V2 uses c = c4 = 1. */
LF_API lf_status lf_genset_builtin(const char* name, double alpha, lf_genset** out);
LF_API lf_status lf_genset_from_json(const char* text, lf_genset** out);
LF_API lf_status lf_genset_size(const lf_genset* g, size_t* out);
/* Copies member `index` into a new matrix owned by the caller. */
LF_API lf_status lf_genset_member(const lf_genset* g, size_t index, lf_matrix** out);
LF_API lf_status lf_genset_to_json(const lf_genset* g, char** out);
LF_API void lf_genset_free(lf_genset* g);

/* ---- spacetime ---- */
/* x[0..3] = (x^1, x^2, x^3, x^4); theta and phi are 3-vectors. */
LF_API lf_status lf_d4(const double theta[3], const double phi[3], lf_matrix** out);
LF_API lf_status lf_apply(const lf_matrix* d, const double x[4], double out[4]);
LF_API lf_status lf_interval_sq(const double x[4], double* out);
LF_API lf_status lf_interval_sq_via_det(const double x[4], double* out);

/* ---- suites ---- */
typedef struct lf_config {
  uint64_t seed;
  uint32_t trials;
  double alpha;
  double abs_eps;
  double exp_eps;
  const char* perturb; /* "SET:member:row:col[:re[:im]]" or NULL */
} lf_config;

LF_API lf_config lf_config_default(void);

/* suite: verify transfer invariants sun exercises all */
LF_API lf_status lf_run_suite(const char* suite, const lf_config* cfg, lf_reports** out);

typedef struct lf_report_view {
  const char* identity;
  const char* label;
  double max_residual;
  double tolerance;
  int passed;
  const char* witness; /* NULL when passed */
  const char* note;    /* "" when absent */
} lf_report_view;

LF_API size_t lf_reports_count(const lf_reports* r);
/* The view borrows from `r` and stays valid until lf_reports_free. */
LF_API lf_status lf_reports_get(const lf_reports* r, size_t index, lf_report_view* out);
LF_API int lf_reports_all_passed(const lf_reports* r);
/* One JSON object per line. */
LF_API lf_status lf_reports_to_jsonl(const lf_reports* r, char** out);
LF_API size_t lf_reports_artifact_count(const lf_reports* r);
LF_API lf_status lf_reports_artifact(const lf_reports* r, size_t index, const char** name, const char** json_text,
                                     const char** text);
LF_API void lf_reports_free(lf_reports* r);

#ifdef __cplusplus
}
#endif

#endif
