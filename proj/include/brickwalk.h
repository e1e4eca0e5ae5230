/* C interface for the brickwalk library.
 *
 * Every function returns a bw_status. On failure the out-parameters are left
 * untouched and bw_last_error() describes the problem for the calling thread.
 * Strings handed out through char** are heap copies; release them with
 * bw_string_free. Opaque handles have matching *_free functions.
 */
#ifndef BRICKWALK_H
#define BRICKWALK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bw_status {
    BW_OK = 0,
    BW_ERROR_INVALID_ARGUMENT = 1,
    BW_ERROR_DOMAIN = 2,
    BW_ERROR_LIMIT = 3,
    BW_ERROR_INTERNAL = 4
} bw_status;

/* Library version string (static storage, do not free). */
const char* bw_version(void);

/* Message for the most recent failure on this thread (static storage). */
const char* bw_last_error(void);

/* Releases a string allocated by this library. NULL is allowed. */
void bw_string_free(char* text);

/* ---- exact integer sequences (decimal string outputs) ---- */

bw_status bw_factorial(long n, char** out);
bw_status bw_binomial(long n, long k, char** out);
bw_status bw_catalan(long n, char** out);
bw_status bw_narayana(long n, long k, char** out);
bw_status bw_motzkin(long n, char** out);

/* ---- moments of uniform random flights (fraction string outputs) ---- */

/* Entry (i, j) of the combinatorial transfer matrix at parameter nu.
 * nu is a fraction such as "0", "1", "1/2". */
bw_status bw_a_entry(const char* nu, long i, long j, char** out);

/* Even moment W_{m}(nu; 2n) as an exact fraction. */
bw_status bw_moment_even(const char* nu, int m, int n, char** out);

/* Scaled central binomial sequence 6*(2n)! / (n! (n+2)!). */
bw_status bw_super_ballot(int n, char** out);

/* Closed form for the fourth moment in odd dimensions: nu is "1/2" or "3/2",
 * s is the even moment order, convention is "verbatim" or "corrected". */
bw_status bw_odd_dim_w4(const char* nu, int s, const char* convention, char** out);

/* ---- dense lower-triangular matrices of exact fractions ---- */

typedef struct bw_matrix bw_matrix;

/* Truncated (size x size) transfer matrix at parameter nu. */
bw_status bw_a_matrix(const char* nu, int size, bw_matrix** out);
bw_status bw_matrix_power(const bw_matrix* base, int exponent, bw_matrix** out);
bw_status bw_matrix_multiply(const bw_matrix* lhs, const bw_matrix* rhs, bw_matrix** out);
bw_status bw_matrix_size(const bw_matrix* matrix, int* out);
bw_status bw_matrix_entry(const bw_matrix* matrix, int i, int j, char** out);
bw_status bw_matrix_row_sum(const bw_matrix* matrix, int i, char** out);
void bw_matrix_free(bw_matrix* matrix);

/* ---- lattice walk enumeration ---- */

/* Number of walks of the given length between two vertices of a lattice
 * family. Family tags: G0_<m>, G1_<m>, GHat1_<m>, VE_<dim>, BrickPlane,
 * HHalfPlane, VHalfPlane, ReflVHalfPlane, QuarterPlane, ReflQuarterPlane.
 * start/end hold `dimension` coordinates. */
bw_status bw_count_paths(const char* family, const int* start, const int* end, int dimension,
                         int length, char** out);

/* Number of abelian squares of total length 2n over an m-letter alphabet. */
bw_status bw_count_abelian_squares(int m, int n, char** out);

/* ---- flat-step words and the rewrite to peak-counted words ---- */

/* Rewrites a balanced word over U/D/H (U only at odd positions, D only at
 * even positions, prefix counts of U never behind D) into a U/D word whose
 * peak count equals the number of rewrite invocations. */
bw_status bw_motzkin_to_dyck(const char* word, char** out_word, int* out_peaks);

/* Exhaustively checks the rewrite on all admissible words of length 2n with
 * k letters U (requires 0 <= k <= n <= 9). */
bw_status bw_verify_bijectivity(int n, int k, int64_t* out_domain, int64_t* out_image,
                                int* out_all_valid, int* out_narayana_match);

/* ---- closed forms for walks confined to planar cones ---- */

/* Number of length-n walks of a two-dimensional family from the origin to
 * (i, j) where i is the horizontal coordinate and j the vertical one.
 * closed_form reports whether a formula was used; when it is 0 the value was
 * obtained by exhaustive enumeration and *out_note explains that. out_note
 * may be NULL if the caller does not need it. */
bw_status bw_cone_count(const char* family, int i, int j, int length, char** out_value,
                        int* out_closed_form, char** out_note);

/* ---- consistency check suites ---- */

typedef struct bw_report bw_report;

typedef struct bw_verify_bounds {
    int m_max;        /* -1 for the suite default */
    int n_max;        /* -1 for the suite default */
    int len_max;      /* -1 for the suite default */
    long long mc_samples; /* -1 for the suite default */
    int mc_seeds;     /* -1 for the suite default */
} bw_verify_bounds;

/* Fills a bounds struct with the -1 sentinels. */
void bw_verify_bounds_init(bw_verify_bounds* bounds);

/* Runs a named suite: theorems, lemma, bijection, cones, montecarlo, all. */
bw_status bw_verify(const char* suite, const bw_verify_bounds* bounds, bw_report** out);

/* Integrality table for nu >= 2: every moment times C(2 nu - 1, 2) must be an
 * integer. Encoded as one report row per (m, n) cell. */
bw_status bw_integrality_report(int nu, int m_max, int n_max, bw_report** out);

bw_status bw_report_size(const bw_report* report, size_t* out);
bw_status bw_report_name(const bw_report* report, size_t index, char** out);
bw_status bw_report_lhs(const bw_report* report, size_t index, char** out);
bw_status bw_report_rhs(const bw_report* report, size_t index, char** out);
bw_status bw_report_pass(const bw_report* report, size_t index, int* out);
bw_status bw_report_failures(const bw_report* report, size_t* out);
void bw_report_free(bw_report* report);

/* ---- Monte Carlo estimation ---- */

/* Mean of |position|^(2n) after m unit steps in the given dimension. */
bw_status bw_mc_moment(int dimension, int m, int n, long long samples, uint64_t seed,
                       double* out_estimate, double* out_stderr);

/* Probability that the walk ends strictly inside the unit ball. */
bw_status bw_mc_prob_within_unit(int dimension, int m, long long samples, uint64_t seed,
                                 double* out_estimate, double* out_stderr);

#ifdef __cplusplus
}
#endif

#endif /* BRICKWALK_H */
