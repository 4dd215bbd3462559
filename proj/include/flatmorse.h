#ifndef FLATMORSE_H
#define FLATMORSE_H

/* C interface to the flat-connection Morse theory engine.
 *
 * Conventions:
 *  - Every function returning fm_status sets a thread-local message on
 *    failure, readable through fm_last_error().
 *  - Strings returned through char** are heap-allocated; release them with
 *    fm_string_free(). Handles are released with their matching _free().
 *  - Weights are exact rationals ("1/2", "3"); floating-point notation is
 *    rejected so regularity stays a decidable question.
 *  - JSON payloads carry "schema": 1 and polynomial coefficients as decimal
 *    strings, lowest degree first (they outgrow 64 bits quickly).
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fm_status {
  FM_OK = 0,
  FM_ERR_PARSE,
  FM_ERR_INVALID_ARGUMENT,
  FM_ERR_NOT_NORMALIZED,
  FM_ERR_SUBSET_OVERFLOW,
  FM_ERR_NO_INTERIOR_WEIGHT,
  FM_ERR_IRREGULAR_WEIGHTS,
  FM_ERR_GENUS_ZERO,
  FM_ERR_INEXACT_DIVISION,
  FM_ERR_UNRESOLVED_BASE_CASE,
  FM_ERR_ANTIPODAL_LOG,
  FM_ERR_NO_CONVERGENCE,
  FM_ERR_SLICE_DIMENSION,
  FM_ERR_DEGENERATE_HESSIAN,
  FM_ERR_CENSUS_MISMATCH,
  FM_ERR_ACTION_UNDEFINED,
  FM_ERR_INTERNAL
} fm_status;

const char* fm_status_name(fm_status status);

/* Message of the most recent failure on this thread; never NULL. */
const char* fm_last_error(void);

void fm_string_free(char* s);

/* ---- weight configurations ---------------------------------------------- */

typedef struct fm_weights fm_weights;

/* weights: comma-separated rationals, e.g. "1/2,1/3"; may be "" for n = 0.
 * mode: "raw", "classic", or "parabolic". */
fm_status fm_weights_parse(int genus, const char* weights, const char* mode,
                           fm_weights** out);

/* Drops 0/1 weights (flipping t_1 -> 1 - t_1 when an odd number of weights
 * equal 1) and lands in classic or parabolic mode. transcript_json, if
 * non-NULL, receives a JSON array of the steps taken. */
fm_status fm_weights_normalize(const fm_weights* in, fm_weights** out,
                               char** transcript_json);

/* *regular = 1 iff no kappa_J is an integer. On the irregular side, witness
 * (if non-NULL) receives the least offending subset, e.g. "{1,3}". */
fm_status fm_weights_is_regular(const fm_weights* w, int* regular,
                                char** witness);

/* dim M: 6g - 6 classic, 6g - 6 + 2n parabolic. */
fm_status fm_weights_dimension(const fm_weights* w, int* dim);

void fm_weights_free(fm_weights* w);

/* ---- polynomials --------------------------------------------------------- */

typedef struct fm_poly fm_poly;

/* ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)), exact. */
fm_status fm_hn_poincare(int genus, fm_poly** out);

/* base_poly: NULL asserts the genus-0 base space empty; otherwise a
 * comma-separated integer coefficient list, lowest degree first, giving its
 * Poincare polynomial. Ignored in classic mode. */
fm_status fm_poincare(const fm_weights* w, const char* base_poly,
                      fm_poly** out);

/* (1+t)^{2g} times fm_poincare. */
fm_status fm_u2_poincare(const fm_weights* w, const char* base_poly,
                         fm_poly** out);

/* Closed form relative to the unknown base polynomial P0:
 * {"coefficient_of_base": [...], "remainder": [...]}. Parabolic only. */
fm_status fm_symbolic_poincare(const fm_weights* w, char** json);

/* Critical strata with kinds, defining subsets, Morse indices, dimensions,
 * and stratum Poincare polynomials. */
fm_status fm_strata_json(const fm_weights* w, const char* base_poly,
                         char** json);

/* Compact-manifold sanity checks on the computed polynomial. FM_OK even
 * when a check fails; read "all_pass" in the payload. */
fm_status fm_consistency_json(const fm_weights* w, const char* base_poly,
                              char** json);

fm_status fm_poly_to_text(const fm_poly* p, char** text);
fm_status fm_poly_to_json(const fm_poly* p, char** json);
void fm_poly_free(fm_poly* p);

/* ---- numerical verification ---------------------------------------------- */

typedef struct fm_verify_options {
  uint64_t seed;
  int samples;        /* random points per statistical check */
  int max_iterations; /* Gauss-Newton cap */
  int probe_starts;   /* multi-start count for the emptiness probe */
  double fiber_tol;   /* |log mu| convergence target */
  double critical_residual_tol;
  double fd_step;
  double hessian_step;
  double eig_rel_threshold;
} fm_verify_options;

/* Fills in the library defaults; call before overriding fields. */
void fm_verify_options_init(fm_verify_options* opts);

/* Builds every closed-form critical tuple, deduplicates conjugacy classes,
 * measures Hessian indices and compares them with the index formula.
 * Parabolic only. The payload lists classes, indices and nullities. */
fm_status fm_verify_critical(const fm_weights* w,
                             const fm_verify_options* opts, char** json);

/* Samples random fiber points, checks Gauss-Newton convergence, the rank of
 * the moment-map derivative, and the derivative formula against finite
 * differences. Payload carries the worst deviations seen. */
fm_status fm_verify_regular(const fm_weights* w,
                            const fm_verify_options* opts, char** json);

/* Multi-start search for a point of the genus-0 moduli space. "found":
 * false means probably empty, never certainly. */
fm_status fm_probe_empty(const fm_weights* w, const fm_verify_options* opts,
                         char** json);

/* The full ten-criterion verification suite. *all_pass (if non-NULL) gets
 * 0/1; the payload has one entry per criterion with a detail line. */
fm_status fm_selftest(const fm_verify_options* opts, char** json,
                      int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
