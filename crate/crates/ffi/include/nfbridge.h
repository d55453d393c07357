#ifndef NFBRIDGE_H
#define NFBRIDGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NfbStatus {
  NFB_STATUS_OK = 0,
  NFB_STATUS_NULL_POINTER = 1,
  NFB_STATUS_INVALID_UTF8 = 2,
  NFB_STATUS_INVALID_INPUT = 3,
  NFB_STATUS_UNKNOWN_SUITE = 4,
  NFB_STATUS_SCENARIO = 5,
  NFB_STATUS_PRECONDITION = 6,
  NFB_STATUS_IO = 7,
  NFB_STATUS_PANIC = 8,
} NfbStatus;

/**
 * Suite report handle.
 */
typedef struct NfbReport NfbReport;

/**
 * Scenario handle.
 */
typedef struct NfbScenario NfbScenario;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *nfb_last_error(void);

/**
 * Version recorded in reports; static storage.
 */
const char *nfb_version(void);

/**
 * # Safety
 * `s` must be null or a pointer obtained from this library.
 */
void nfb_string_free(char *s);

/**
 * Default scenario: every suite, exact mode, seed 1.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum NfbStatus nfb_scenario_new(struct NfbScenario **out);

/**
 * Scenario from JSON text; unknown keys are rejected.
 *
 * # Safety
 * `json` must be null or NUL-terminated; `out` must be null or valid for writes.
 */
enum NfbStatus nfb_scenario_from_json(const char *json, struct NfbScenario **out);

/**
 * # Safety
 * `scenario` must be null or a live handle from this library.
 */
enum NfbStatus nfb_scenario_set_seed(struct NfbScenario *scenario, uint64_t seed);

/**
 * `exact` nonzero selects exact arithmetic, zero selects floating point.
 *
 * # Safety
 * `scenario` must be null or a live handle from this library.
 */
enum NfbStatus nfb_scenario_set_exact(struct NfbScenario *scenario, int32_t exact);

/**
 * # Safety
 * `scenario` must be null or a handle from this library not yet freed.
 */
void nfb_scenario_free(struct NfbScenario *scenario);

/**
 * Runs suite `name` (or `all`) under `scenario`.
 *
 * # Safety
 * `scenario` must be a live handle, `name` NUL-terminated, `out` valid for writes.
 */
enum NfbStatus nfb_run_suite(const struct NfbScenario *scenario,
                             const char *name,
                             struct NfbReport **out);

/**
 * Check counts; any out-pointer may be null.
 *
 * # Safety
 * `report` must be a live handle; non-null out-pointers must be valid for writes.
 */
enum NfbStatus nfb_report_counts(const struct NfbReport *report,
                                 size_t *total,
                                 size_t *passed,
                                 size_t *failed);

/**
 * Writes 1 when every check passed, else 0.
 *
 * # Safety
 * `report` must be a live handle; `out` must be valid for writes.
 */
enum NfbStatus nfb_report_passed(const struct NfbReport *report, int32_t *out);

/**
 * JSON text of the report; release with [`nfb_string_free`].
 *
 * # Safety
 * `report` must be a live handle; `out` must be valid for writes.
 */
enum NfbStatus nfb_report_to_json(const struct NfbReport *report, char **out);

/**
 * # Safety
 * `report` must be null or a handle from this library not yet freed.
 */
void nfb_report_free(struct NfbReport *report);

/**
 * Radial ring force `ρ_e(E_p − H_p)` with `j_τ = ρ_e·c`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum NfbStatus nfb_ring_force(double rho_e, double e_p, double h_p, double c, double *out);

/**
 * `ψ⁺Âψ` for a real y-wave `(E_x, E_z, H_x, H_z)`; `kind` is a matrix name
 * such as `beta`, `alpha2`, `pseudovector(3)` or `tensor(1,2)`.
 *
 * # Safety
 * `kind` must be NUL-terminated, `fields` must point to four doubles and
 * `re`, `im` must be valid for writes.
 */
enum NfbStatus nfb_bilinear(const char *kind, const double *fields, double *re, double *im);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NFBRIDGE_H */
