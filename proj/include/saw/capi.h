#ifndef SAW_CAPI_H
#define SAW_CAPI_H

/* C interface to the self-avoiding-walk sampling library.
 *
 * Every function that can fail returns a saw_status; on failure a
 * human-readable message is available from saw_last_error() until the
 * next failing call on the same thread. Objects are created through
 * *_new functions, owned by the caller, and released with the matching
 * *_free. Strings returned through char** are heap copies; release
 * them with saw_string_free. Exact integers and 50-digit reals are
 * passed as decimal strings so no precision is lost at the boundary.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum saw_status {
    SAW_OK = 0,
    SAW_INVALID_ARGUMENT = 1,
    SAW_LIMIT_EXCEEDED = 2,
    SAW_EMPTY = 3,
    SAW_INTERNAL = 4
} saw_status;

typedef enum saw_model {
    SAW_MODEL_CROSSING = 0,  /* SAW crossing the k x k square corner to corner */
    SAW_MODEL_DIRECTED = 1,  /* North/East walk to the opposite corner */
    SAW_MODEL_NES = 2,       /* North/East/South walk across the strip 0 <= y <= k */
    SAW_MODEL_UNTRAPPED = 3  /* fixed-length SAW kept extendable forever */
} saw_model;

/* Message describing the most recent failure on this thread ("" if none). */
const char* saw_last_error(void);

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* saw_version(void);

void saw_string_free(char* s);

/* ---------- sampled walk batches ---------- */

typedef struct saw_run saw_run;

/* Draws n walks of the given model. k is the square or strip size
 * (crossing, directed, nes), l the nes walk width, length the
 * untrapped walk length; pass 0 for parameters the model ignores.
 * Identical arguments always produce the identical batch. */
saw_status saw_run_new(saw_model model, int k, int l, int length,
                       uint64_t n, uint64_t seed, saw_run** out);
void saw_run_free(saw_run* run);

uint64_t saw_run_count(const saw_run* run);

/* Step letters of walk i, e.g. "ENNE". */
saw_status saw_run_steps(const saw_run* run, uint64_t i, char** out);

/* Reciprocal sampling probability 1/p of walk i as a decimal integer
 * string, and as the exponent pair 1/p = 2^a * 3^b. */
saw_status saw_run_invp(const saw_run* run, uint64_t i, char** out);
saw_status saw_run_powers(const saw_run* run, uint64_t i,
                          uint32_t* a, uint32_t* b);

/* Eligible-step counts seen while growing walk i, one entry per step.
 * The pointer borrows from the run and stays valid until saw_run_free. */
saw_status saw_run_per_step(const saw_run* run, uint64_t i,
                            const uint8_t** data, size_t* len);

/* SVG figure of the whole batch. Steps that were forced (single
 * eligible choice) are drawn thick. cell is the lattice spacing in
 * pixels (0 for the default), columns the panel count per row (0 to
 * auto-square). */
saw_status saw_run_render(const saw_run* run, int cell, int columns,
                          char** svg_out);

/* ---------- estimation ---------- */

typedef struct saw_estimate saw_estimate;

/* Runs the importance-sampling estimator over n fresh walks; the mean
 * of 1/p estimates the walk count. threads <= 1 runs sequentially.
 * Results are reproducible for fixed (seed, threads); different thread
 * counts partition the seed into different substreams. */
saw_status saw_estimate_new(saw_model model, int k, int l, int length,
                            uint64_t n, uint64_t seed, int threads,
                            saw_estimate** out);
void saw_estimate_free(saw_estimate* e);

uint64_t saw_estimate_samples(const saw_estimate* e);

/* Exact sample mean as a rational: decimal numerator and denominator. */
saw_status saw_estimate_mean(const saw_estimate* e, char** num, char** den);

/* log10 of the mean, standard error of the mean, and the estimated
 * relative variance E(X^2)/E(X)^2 - 1. std_error is NaN for n < 2. */
saw_status saw_estimate_stats(const saw_estimate* e, double* log10_mean,
                              double* std_error, double* relative_variance);

/* ---------- exact enumeration ---------- */

typedef struct saw_enum_report saw_enum_report;

/* Exhaustive count of the model's walks, with the weighted sums
 * sum(1/p) and sum(1/p^2) where available. l is the nes length and is
 * ignored otherwise. Fails with SAW_LIMIT_EXCEEDED when the state
 * space is too large to enumerate (crossing k > 5, directed k > 12,
 * nes (k+1)^l > 1e7). */
saw_status saw_enumerate(saw_model model, int k, int l,
                         saw_enum_report** out);
void saw_enum_report_free(saw_enum_report* r);

saw_status saw_enum_count(const saw_enum_report* r, char** out);
/* SAW_EMPTY when the report carries no weighted sums (crossing k = 5). */
saw_status saw_enum_weighted_sum(const saw_enum_report* r, char** out);
saw_status saw_enum_weighted_sq_sum(const saw_enum_report* r, char** out);

/* SVG of every crossing walk of the k x k square (k <= 4). */
saw_status saw_render_crossing_walks(int k, int cell, int columns,
                                     char** svg_out);

/* ---------- exact moment tables ---------- */

typedef struct saw_moments saw_moments;

/* Generating-function moment table. For SAW_MODEL_NES rows are indexed
 * by walk length l = 1..lmax at strip size k; for SAW_MODEL_DIRECTED
 * rows are indexed by square size k = 1..lmax and the k argument is
 * ignored. Other models have no closed moment table. */
saw_status saw_moments_new(saw_model model, int k, int lmax,
                           saw_moments** out);
void saw_moments_free(saw_moments* m);

int saw_moments_rows(const saw_moments* m);

/* Row for index value idx (l or k as above): E(X)^2 and E(X^2) as
 * decimal strings. */
saw_status saw_moments_row(const saw_moments* m, int idx,
                           char** mean_sq, char** second_moment);

/* ---------- singularity analysis ---------- */

typedef struct saw_asym saw_asym;

/* Dominant pole rho_k of the second-moment generating function and its
 * residue amplitude alpha_k, plus residual checks of both four-term
 * large-k expansions (see saw_asym_check). Requires k >= 2. */
saw_status saw_asym_new(int k, saw_asym** out);
void saw_asym_free(saw_asym* a);

/* 50-digit decimal values. */
saw_status saw_asym_rho(const saw_asym* a, char** out);
saw_status saw_asym_alpha(const saw_asym* a, char** out);

/* Residual of the truncated expansion against the computed value.
 * which: 0 = rho, 1 = alpha. variant: 0 = the reference coefficient
 * set as classically quoted, 1 = the corrected set solved order by
 * order from the kernel equation (the two differ from the 4^-k order
 * on; see README). ratio = |residual| / next_order_magnitude. */
saw_status saw_asym_check(const saw_asym* a, int which, int variant,
                          double* residual, double* next_order,
                          double* ratio);

/* ---------- growth-constant bounds ---------- */

typedef struct saw_bounds saw_bounds;

/* Enumerates crossing walks for k = 1..kmax (kmax <= 4 so weighted
 * sums exist) and derives lower bounds for the growth constants:
 * lambda_lb = max c(k)^(1/(k+1)^2), beta_lb = max (sqrt(2) d(k))^(1/(k+1)^2). */
saw_status saw_bounds_new(int kmax, saw_bounds** out);
void saw_bounds_free(saw_bounds* b);

saw_status saw_bounds_values(const saw_bounds* b, double* lambda_lb,
                             double* beta_lb);
int saw_bounds_rows(const saw_bounds* b);
saw_status saw_bounds_row(const saw_bounds* b, int k, char** count,
                          char** weighted_sum);

#ifdef __cplusplus
}
#endif

#endif /* SAW_CAPI_H */
