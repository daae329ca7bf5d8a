#ifndef WEILBSD_H
#define WEILBSD_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes. Values are stable.
 */
typedef enum WbStatus {
  WB_STATUS_OK = 0,
  WB_STATUS_INVALID_INPUT = 1,
  WB_STATUS_INVALID_FIELD = 2,
  WB_STATUS_DEGREE_ODD = 3,
  WB_STATUS_NOT_MONIC = 4,
  WB_STATUS_FUNCTIONAL_EQUATION_FAILURE = 5,
  WB_STATUS_RIEMANN_HYPOTHESIS_FAILURE = 6,
  WB_STATUS_VALIDATION_FAILURE = 7,
  WB_STATUS_FIELD_MISMATCH = 8,
  WB_STATUS_RANK_MISMATCH = 9,
  WB_STATUS_NON_INTEGRAL_SHA = 10,
  WB_STATUS_REPORT_INCONSISTENT = 11,
  WB_STATUS_PRECLUDED_PRIME = 12,
  WB_STATUS_DEGREE_CAP_EXCEEDED = 13,
  WB_STATUS_NULL_POINTER = 20,
  WB_STATUS_UTF8 = 21,
  WB_STATUS_OVERFLOW = 22,
  WB_STATUS_PANIC = 30,
  WB_STATUS_INTERNAL = 31,
} WbStatus;

/*
 How [`wb_report_new`] obtains the Hom lattice bases.
 */
typedef enum WbRegulatorMode {
  /*
   No bases; the rank must be zero.
   */
  WB_REGULATOR_MODE_ABSENT = 0,
  /*
   `{1, pi}` in `Z[pi]`; needs `f_A = f_B` of degree 2.
   */
  WB_REGULATOR_MODE_ENDOMORPHISM = 1,
  /*
   Row-major `n x n` Gram matrix.
   */
  WB_REGULATOR_MODE_GRAM = 2,
} WbRegulatorMode;

/*
 Opaque BSD report.
 */
typedef struct WbReport WbReport;

/*
 Opaque certified Weil polynomial.
 */
typedef struct WbWeilPolynomial WbWeilPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or NULL. The pointer is
 valid until the next library call on the same thread.
 */
const char *wb_last_error_message(void);

/*
 Certifies the polynomial with ascending coefficients `coeffs[0..len]`.

 # Safety
 `coeffs` must point to `len` readable values; `out` must be writable.
 */
enum WbStatus wb_weil_validate(uint64_t q,
                               const int64_t *coeffs,
                               uintptr_t len,
                               struct WbWeilPolynomial **out);

/*
 Characteristic polynomial of a genus-`g` curve from `counts[0..g]`.

 # Safety
 `counts` must point to `g` readable values; `out` must be writable.
 */
enum WbStatus wb_weil_from_counts(uint64_t q,
                                  uintptr_t g,
                                  const uint64_t *counts,
                                  struct WbWeilPolynomial **out);

/*
 The constant polynomial 1 (trivial Albanese).

 # Safety
 `out` must be writable.
 */
enum WbStatus wb_weil_trivial(uint64_t q, struct WbWeilPolynomial **out);

/*
 Dimension `g` (half the degree); 0 for a null handle.

 # Safety
 `w` must be null or a live handle.
 */
uintptr_t wb_weil_dimension(const struct WbWeilPolynomial *w);

/*
 `f(1)`.

 # Safety
 `w` must be a live handle; `out` must be writable.
 */
enum WbStatus wb_weil_point_count(const struct WbWeilPolynomial *w, int64_t *out);

/*
 Coefficients as a JSON array string, constant term first.

 # Safety
 `w` must be a live handle; `out` must be writable.
 */
enum WbStatus wb_weil_coefficients_json(const struct WbWeilPolynomial *w, char **out);

/*
 # Safety
 `w` must be null or a handle not yet freed.
 */
void wb_weil_free(struct WbWeilPolynomial *w);

/*
 Analytic and algebraic rank; fails with `RANK_MISMATCH` if they differ.

 # Safety
 `fa`, `fb` must be live handles; outputs must be writable.
 */
enum WbStatus wb_rank(const struct WbWeilPolynomial *fa,
                      const struct WbWeilPolynomial *fb,
                      uintptr_t *out_analytic,
                      uintptr_t *out_algebraic);

/*
 Assembles the BSD report with the default prime list.

 For `WB_REGULATOR_MODE_GRAM`, `gram` holds `gram_size * gram_size`
 entries in row-major order; it is ignored otherwise.

 # Safety
 Handles must be live; `gram` must be readable as described; `out` must
 be writable.
 */
enum WbStatus wb_report_new(const struct WbWeilPolynomial *fa,
                            const struct WbWeilPolynomial *fb,
                            enum WbRegulatorMode mode,
                            const int64_t *gram,
                            uintptr_t gram_size,
                            struct WbReport **out);

/*
 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum WbStatus wb_report_rank(const struct WbReport *r, uintptr_t *out);

/*
 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum WbStatus wb_report_sha(const struct WbReport *r, int64_t *out);

/*
 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum WbStatus wb_report_regulator(const struct WbReport *r, int64_t *out);

/*
 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum WbStatus wb_report_torsion(const struct WbReport *r, int64_t *out);

/*
 Leading coefficient `c` as `"num/den"` (or `"num"` when integral).

 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum WbStatus wb_report_leading_coefficient(const struct WbReport *r, char **out);

/*
 Canonical report JSON, identical to the CLI's `bsd` output.

 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum WbStatus wb_report_json(const struct WbReport *r, char **out);

/*
 # Safety
 `r` must be null or a handle not yet freed.
 */
void wb_report_free(struct WbReport *r);

/*
 Runs one CLI job (`command` as on the command line, `job_json` as in a
 job file) and stores the output document in `*out_json`. Returns the CLI
 exit code (0, 2 or 3), or 1 for bad arguments.

 # Safety
 `command` and `job_json` must be NUL-terminated strings; `out_json` must
 be writable.
 */
int32_t wb_run_job(const char *command, const char *job_json, char **out_json);

/*
 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void wb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WEILBSD_H */
