#ifndef THETAPOLY_THETAPOLY_H
#define THETAPOLY_THETAPOLY_H

/* C interface to the theta-curve polynomial engine.
 *
 * Objects are opaque and owned by the caller once returned; release them with
 * the matching *_free function. Polynomials and rationals cross the boundary
 * as strings in the engine's text format (e.g. "-A^8 + A^7 + 1", "3/2"), so
 * no precision is lost. Strings returned through char** must be released with
 * tp_string_free. Every call that can fail returns a tp_status; the message
 * for the last failure on the calling thread is available from
 * tp_last_error(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(THETAPOLY_BUILDING)
#    define TP_API __declspec(dllexport)
#  else
#    define TP_API __declspec(dllimport)
#  endif
#else
#  define TP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tp_status {
  TP_OK = 0,
  TP_ERR_PARSE = 1,
  TP_ERR_VALIDATION = 2,
  TP_ERR_NOT_DIVISIBLE = 3,
  TP_ERR_ORDER_EXCEEDED = 4,
  TP_ERR_INVALID_SIGN = 5,
  TP_ERR_UNKNOWN_NAME = 6,
  TP_ERR_BAD_PARAMETER = 7,
  TP_ERR_SIMPLIFICATION_INCOMPLETE = 8,
  TP_ERR_NON_CUBIC_EXPONENT = 9,
  TP_ERR_WITNESS_MISMATCH = 10,
  TP_ERR_CERTIFICATE_VIOLATION = 11,
  TP_ERR_BUDGET_EXCEEDED = 12,
  TP_ERR_INVALID_ARGUMENT = 13,
  TP_ERR_INTERNAL = 14
} tp_status;

typedef enum tp_invariant { TP_YAMADA = 0, TP_YOKOTA = 1 } tp_invariant;

typedef struct tp_diagram tp_diagram;
typedef struct tp_ftreport tp_ftreport;
typedef struct tp_certificate tp_certificate;
typedef struct tp_theorem tp_theorem;

TP_API const char* tp_version(void);
TP_API const char* tp_status_name(tp_status status);
/* Message of the most recent failure on this thread ("" if none). */
TP_API const char* tp_last_error(void);
TP_API void tp_string_free(char* s);

/* ---- diagrams ---- */

TP_API tp_status tp_diagram_parse(const char* text, tp_diagram** out);
/* trivial, theta_3_1, theta_5_1, T(k) for odd k >= 1 */
TP_API tp_status tp_diagram_catalog(const char* name, tp_diagram** out);
/* Newline-separated list of catalog names. */
TP_API tp_status tp_catalog_names(char** out);
TP_API void tp_diagram_free(tp_diagram* d);

TP_API tp_status tp_diagram_render(const tp_diagram* d, char** out);
TP_API tp_status tp_diagram_name(const tp_diagram* d, char** out);
TP_API size_t tp_diagram_crossing_count(const tp_diagram* d);
/* s(D), n(D): signed sums over self- and non-self-crossings. */
TP_API tp_status tp_diagram_writhe(const tp_diagram* d, int* self_sum, int* non_self_sum);
TP_API tp_status tp_diagram_mirror(const tp_diagram* d, tp_diagram** out);
TP_API tp_status tp_diagram_connected_sum(const tp_diagram* left, const tp_diagram* right, tp_diagram** out);
/* eps is an n-sign such as "+-0i" applied to the listed crossings. */
TP_API tp_status tp_diagram_apply_nsign(const tp_diagram* d, const size_t* crossings, size_t count, const char* eps,
                                        tp_diagram** out);
/* Simplified diagram plus a newline-separated move log. */
TP_API tp_status tp_diagram_simplify(const tp_diagram* d, tp_diagram** out, char** log);

/* ---- invariants ---- */

/* Normalized Yamada polynomial R~ in A. */
TP_API tp_status tp_yamada(const tp_diagram* d, int simplify_first, char** out);
/* Unnormalized R_A of any diagram (theta curve, handcuff, circles). */
TP_API tp_status tp_yamada_raw(const tp_diagram* d, int simplify_first, char** out);
/* Yokota bracket <D> in t. */
TP_API tp_status tp_yokota_bracket(const tp_diagram* d, char** out);
/* P_z in z. */
TP_API tp_status tp_yokota(const tp_diagram* d, char** out);
/* Coefficients of x^0..x^trunc after A = e^x (or z = e^x), newline-separated. */
TP_API tp_status tp_series(const tp_diagram* d, tp_invariant inv, unsigned trunc, char** out);

/* ---- finite-type machinery ---- */

/* coeff is "A^r" (yamada), "z^r" (yokota) or "x^n" (series, n <= trunc). */
TP_API tp_status tp_alt_sum(const tp_diagram* d, const size_t* crossings, size_t count, tp_invariant inv,
                            const char* coeff, unsigned trunc, tp_ftreport** out);
TP_API tp_status tp_poly_alt_sum(const tp_diagram* d, const size_t* crossings, size_t count, tp_invariant inv,
                                 char** out);
TP_API void tp_ftreport_free(tp_ftreport* r);
TP_API tp_status tp_ftreport_value(const tp_ftreport* r, char** out);
TP_API tp_status tp_ftreport_functional(const tp_ftreport* r, char** out);
TP_API tp_status tp_ftreport_diagram(const tp_ftreport* r, char** out);
/* -1 when not applicable (yokota) or the alternating sum is zero. */
TP_API int tp_ftreport_divisibility(const tp_ftreport* r);
TP_API size_t tp_ftreport_row_count(const tp_ftreport* r);
TP_API tp_status tp_ftreport_row(const tp_ftreport* r, size_t i, char** eps, int* plus_count, char** value,
                                 char** functional);

/* Returns TP_ERR_WITNESS_MISMATCH if the two sides differ; lhs/rhs are still filled. */
TP_API tp_status tp_echain_witness(const tp_diagram* d, const size_t* crossings, size_t count, char** lhs, char** rhs,
                                   int* m);

TP_API tp_status tp_order_certificate(const tp_diagram* const* diagrams, size_t count, unsigned n, unsigned trunc,
                                      tp_invariant inv, uint64_t seed, tp_certificate** out);
TP_API void tp_certificate_free(tp_certificate* c);
TP_API size_t tp_certificate_entry_count(const tp_certificate* c);
TP_API size_t tp_certificate_violations(const tp_certificate* c);
/* crossings stays valid until the certificate is freed; violation is -1 when
 * every required coefficient vanished. */
TP_API tp_status tp_certificate_entry(const tp_certificate* c, size_t i, char** diagram, const size_t** crossings,
                                      size_t* count, int* violation);

/* which = 1 or 2 selects the experiment. */
TP_API tp_status tp_theorem_experiment(int which, int r, int n, int budget, tp_theorem** out);
TP_API void tp_theorem_free(tp_theorem* t);
/* Borrowed; valid until the theorem report is freed. */
TP_API const tp_ftreport* tp_theorem_primary(const tp_theorem* t);
TP_API const tp_ftreport* tp_theorem_mirrored(const tp_theorem* t);
TP_API int tp_theorem_selection_independent(const tp_theorem* t);

#ifdef __cplusplus
}
#endif

#endif
