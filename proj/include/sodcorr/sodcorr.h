/*
 * sodcorr - exact correlations of the binary sum-of-digits function under
 * addition of a constant.
 *
 * C interface to the shared library.  All exact rational values cross the
 * boundary as "num/den" strings in lowest terms; strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * sodcorr_string_free.  Handles are opaque and single-owner.  Every function
 * returns a status code; out-parameters are written only on SODCORR_OK.
 */
#ifndef SODCORR_SODCORR_H
#define SODCORR_SODCORR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sodcorr_status {
  SODCORR_OK = 0,
  SODCORR_ERR_INVALID = 1,  /* bad argument (parse error, wrong parity, ...) */
  SODCORR_ERR_RANGE = 2,    /* argument outside the supported range */
  SODCORR_ERR_IO = 3,       /* file could not be opened or written */
  SODCORR_ERR_NOMEM = 4,
  SODCORR_ERR_INTERNAL = 5
} sodcorr_status;

/* Static description of a status code. */
const char* sodcorr_status_name(sodcorr_status status);

/* Human-readable detail for the most recent error on this thread. */
const char* sodcorr_last_error(void);

void sodcorr_string_free(char* s);

/* ---- digit manipulation ------------------------------------------------ */

sodcorr_status sodcorr_digit_sum(uint64_t n, uint32_t* out);
sodcorr_status sodcorr_carry_count(uint64_t n, uint64_t t, uint32_t* out);
sodcorr_status sodcorr_reverse_binary(uint64_t odd_t, uint64_t* out);

/* ---- block expansions --------------------------------------------------- */

/*
 * An opaque extended block expansion (k_0, l_0, ..., k_{N-1}, l_{N-1}),
 * least-significant block first, entries >= 1 or infinite.
 */
typedef struct sodcorr_blocks sodcorr_blocks;

/* Parse "2,3,5,inf" (even number of comma-separated entries; "inf" allowed). */
sodcorr_status sodcorr_blocks_parse(const char* text, sodcorr_blocks** out);

/* The expansion (k_0, l_0, ..., k_{N-1}, inf) of an odd integer. */
sodcorr_status sodcorr_blocks_of_odd(uint64_t odd_t, sodcorr_blocks** out);

void sodcorr_blocks_free(sodcorr_blocks* blocks);

sodcorr_status sodcorr_blocks_format(const sodcorr_blocks* blocks, char** out);
sodcorr_status sodcorr_blocks_pair_count(const sodcorr_blocks* blocks, uint32_t* out);

/* ---- exact densities ---------------------------------------------------- */

/* c_t for any integer t >= 0 (c_0 = 1). */
sodcorr_status sodcorr_cusick_t(uint64_t t, char** out);
/* Density of n with s(n+t) - s(n) = m. */
sodcorr_status sodcorr_mu_t(uint64_t t, int64_t m, char** out);
/* Density of n with s(n+t) - s(n) >= a. */
sodcorr_status sodcorr_delta_t(uint64_t t, int64_t a, char** out);

sodcorr_status sodcorr_cusick_blocks(const sodcorr_blocks* blocks, char** out);
sodcorr_status sodcorr_mu_blocks(const sodcorr_blocks* blocks, int64_t m, char** out);
sodcorr_status sodcorr_delta_blocks(const sodcorr_blocks* blocks, int64_t a, char** out);
sodcorr_status sodcorr_total_mass(const sodcorr_blocks* blocks, char** out);

/* ---- component decomposition ------------------------------------------- */

/*
 * The decomposition gamma = sum_n (-1)^n g_{N,n} C_{N,n}.  The handle exposes
 * the Laurent coefficients of each C_{N,n}(theta).
 */
typedef struct sodcorr_components sodcorr_components;

sodcorr_status sodcorr_components_compute(const sodcorr_blocks* blocks,
                                          sodcorr_components** out);
void sodcorr_components_free(sodcorr_components* components);

/* Number of components, N + 1. */
sodcorr_status sodcorr_components_count(const sodcorr_components* components,
                                        uint32_t* out);
/* Number of Laurent terms of C_{N,n}. */
sodcorr_status sodcorr_components_term_count(const sodcorr_components* components,
                                             uint32_t n, uint32_t* out);
/* Term `index` of C_{N,n} in increasing frequency order. */
sodcorr_status sodcorr_components_term(const sodcorr_components* components,
                                       uint32_t n, uint32_t index,
                                       int64_t* frequency, char** coeff);

/* ---- Thue-Morse values -------------------------------------------------- */

/* gamma_t at theta = pi, the Thue-Morse correlation. */
sodcorr_status sodcorr_tm_gamma(uint64_t t, char** out);
/* (1 - gamma_t(pi)) / 2. */
sodcorr_status sodcorr_sign_change_density(uint64_t t, char** out);

/*
 * Row `row` (0-based) of the value table: -3*gamma_t for t from 2^row to
 * 2^{row+1} inclusive, as an array of "num/den" strings.  Free with
 * sodcorr_string_array_free.
 */
sodcorr_status sodcorr_tm_table_row(uint32_t row, char*** values, size_t* count);
void sodcorr_string_array_free(char** values, size_t count);

/* ---- closed forms and the diagonal array -------------------------------- */

/* B_m(a), the base weighted tail. */
sodcorr_status sodcorr_frak_b(uint32_t m, int64_t a, char** out);
/* c over (inf,1,...,inf,inf): the conjectured N-block minimum. */
sodcorr_status sodcorr_c_extreme(uint32_t n_blocks, char** out);
/* c over (1,inf,...,1,inf): the conjectured N-block maximum. */
sodcorr_status sodcorr_c_ones_over_zeros(uint32_t n_blocks, char** out);

sodcorr_status sodcorr_oeis_entry(uint32_t k, uint32_t l, char** out);
/*
 * Compares the array diagonal with B_m(0) for m <= m_max.  Writes the first
 * mismatching index, or -1 if the diagonal agrees everywhere (the identity is
 * conjectural, so disagreement is reported rather than treated as an error).
 */
sodcorr_status sodcorr_oeis_diagonal_check(uint32_t m_max, int32_t* first_mismatch);

/* ---- brute-force oracle -------------------------------------------------- */

/*
 * Exact fraction of n < 2^lambda with s(n+t) - s(n) >= 0.  lambda = 0 picks
 * the smallest stabilized value; lambda is capped at 34.
 */
sodcorr_status sodcorr_oracle_ct(uint64_t t, uint32_t lambda, uint32_t threads,
                                 char** out);

/* ---- verification scans -------------------------------------------------- */

typedef enum sodcorr_scan_kind {
  SODCORR_SCAN_CUSICK = 0,
  SODCORR_SCAN_EXTREME = 1,
  SODCORR_SCAN_APPEND_ONES = 2,
  SODCORR_SCAN_APPEND_ZERO_ONES = 3,
  SODCORR_SCAN_REVERSAL = 4
} sodcorr_scan_kind;

typedef struct sodcorr_scan_report sodcorr_scan_report;

/*
 * Runs a scan over odd t in [1, t_max].  threads = 0 picks the default
 * (SODCORR_THREADS or hardware concurrency).  out_csv may be NULL for a
 * report-only run; otherwise rows go to out_csv (header + one row per t,
 * LF line endings), a JSON-lines mirror to "<out_csv>.jsonl", and a
 * checkpoint to "<out_csv>.ckpt".  With resume nonzero, the scan continues
 * from the checkpoint and appends.
 */
sodcorr_status sodcorr_scan_run(sodcorr_scan_kind kind, uint64_t t_max,
                                uint32_t threads, const char* out_csv,
                                int resume, sodcorr_scan_report** out);
void sodcorr_scan_report_free(sodcorr_scan_report* report);

uint64_t sodcorr_scan_checked(const sodcorr_scan_report* report);
double sodcorr_scan_wall_seconds(const sodcorr_scan_report* report);
size_t sodcorr_scan_violation_count(const sodcorr_scan_report* report);
size_t sodcorr_scan_equality_count(const sodcorr_scan_report* report);
sodcorr_status sodcorr_scan_violation(const sodcorr_scan_report* report,
                                      size_t index, uint64_t* t, char** value,
                                      char** bound);
sodcorr_status sodcorr_scan_equality(const sodcorr_scan_report* report,
                                     size_t index, uint64_t* t);

/* ---- closed-form inequality checks --------------------------------------- */

/* c over the extreme expansions strictly decreases and stays above 1/2. */
sodcorr_status sodcorr_check_monotone_extreme(uint32_t n_max, int* holds);
/*
 * a_{N,N-3} >= 0 and a_{N,q} > 0 for 1 <= q <= N-3, for 4 <= N <= n_max.
 * On failure writes the first offending (N, q).
 */
sodcorr_status sodcorr_check_problem_anq(uint32_t n_max, int* holds,
                                         uint32_t* fail_n, uint32_t* fail_q);

#ifdef __cplusplus
}
#endif

#endif /* SODCORR_SODCORR_H */
