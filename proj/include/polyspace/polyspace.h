/*
 * polyspace C API.
 *
 * Intersection pairings and volumes of polygon spaces M(alpha), computed
 * exactly. Every function returns a ps_status; on failure a human-readable
 * message is available from ps_last_error() on the calling thread.
 *
 * Strings produced by the library are written into caller buffers: pass
 * (buf, cap, &needed). `needed` receives the length including the
 * terminating NUL; PS_E_BUFFER_TOO_SMALL is returned (and nothing written)
 * when cap < needed. Passing buf = NULL, cap = 0 is the size query.
 *
 * Integers and rationals cross the boundary as decimal strings ("-3",
 * "1/2") so no precision policy is imposed on callers.
 */
#ifndef POLYSPACE_H
#define POLYSPACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PS_API __declspec(dllexport)
#else
#  define PS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
  PS_OK = 0,
  PS_E_PARSE = 1,
  PS_E_INVALID_ARGUMENT = 2,
  PS_E_NON_GENERIC = 3,
  PS_E_DEGREE_MISMATCH = 4,
  PS_E_PARITY_VIOLATION = 5,
  PS_E_RANGE = 6,
  PS_E_CAPACITY = 7,
  PS_E_EVEN_M = 8,
  PS_E_ENGINE_MISMATCH = 9,
  PS_E_BUFFER_TOO_SMALL = 10,
  PS_E_NULL_POINTER = 11,
  PS_E_INTERNAL = 12
} ps_status;

typedef enum ps_engine {
  PS_ENGINE_EXPLICIT = 0,
  PS_ENGINE_RECURSION = 1,
  PS_ENGINE_KONNO_TAKAKURA = 2,
  PS_ENGINE_YOSHIDA = 3
} ps_engine;

typedef struct ps_lengths ps_lengths;
typedef struct ps_family ps_family;
typedef struct ps_table ps_table;
typedef struct ps_report ps_report;

PS_API const char* ps_version(void);
PS_API const char* ps_status_name(ps_status status);
/* Message for the last failing call on this thread; "" if none. */
PS_API const char* ps_last_error(void);
/* "explicit", "recursion", "kt", "yoshida"; NULL for an unknown value. */
PS_API const char* ps_engine_name(ps_engine engine);
PS_API ps_status ps_engine_parse(const char* name, ps_engine* out);

/* Worker count used when a function is passed threads = 0. */
PS_API unsigned ps_default_threads(void);

/* ---- length vectors ---------------------------------------------------- */

/* "4,3,4,3,4" or "1/2,1/2,1,1,1"; m >= 3, every entry > 0. */
PS_API ps_status ps_lengths_parse(const char* csv, ps_lengths** out);
PS_API void ps_lengths_free(ps_lengths* lengths);
PS_API size_t ps_lengths_size(const ps_lengths* lengths);
/* Reduced-form literals, comma separated. */
PS_API ps_status ps_lengths_format(const ps_lengths* lengths, char* buf, size_t cap,
                                   size_t* needed);

PS_API ps_status ps_lengths_is_generic(const ps_lengths* lengths, unsigned threads,
                                       int* out);
PS_API ps_status ps_lengths_is_empty(const ps_lengths* lengths, int* out);
/* Chamber radius min |sum eps_i alpha_i| as a rational string; `witness`
 * (may be NULL) receives m entries of +1/-1 attaining it. */
PS_API ps_status ps_lengths_chamber_radius(const ps_lengths* lengths, unsigned threads,
                                           char* buf, size_t cap, size_t* needed,
                                           int* witness);

/* ---- triangular family -------------------------------------------------- */

PS_API ps_status ps_family_enumerate(const ps_lengths* lengths, unsigned threads,
                                     ps_family** out);
PS_API void ps_family_free(ps_family* family);
PS_API size_t ps_family_size(const ps_family* family);
/* Bit (i - 3) set iff edge i (1-based) is in the member. */
PS_API ps_status ps_family_mask(const ps_family* family, size_t index, uint64_t* mask);
/* "{3,5}" */
PS_API ps_status ps_family_format_member(const ps_family* family, size_t index, char* buf,
                                         size_t cap, size_t* needed);
PS_API ps_status ps_family_signed_sum(const ps_family* family, size_t index, char* buf,
                                      size_t cap, size_t* needed);

/* |S(alpha)|: subsets R of {1..m} with sum_R alpha - sum_{not R} alpha < 0. */
PS_API ps_status ps_negative_subset_count(const ps_lengths* lengths, unsigned threads,
                                          uint64_t* out);

/* ---- pairings ----------------------------------------------------------- */

/* Integer value of the pairing as a decimal string. `exponents` has m
 * entries summing to m - 3. */
PS_API ps_status ps_pairing(const ps_lengths* lengths, const int* exponents, size_t count,
                            ps_engine engine, unsigned threads, char* buf, size_t cap,
                            size_t* needed);

/* Stable zeros-first reorder: permutation[i] is the original index placed
 * at position i. */
PS_API ps_status ps_normalize(const int* exponents, size_t count, size_t* permutation);

/* All multidegrees with their explicit-engine pairing, lexicographic. */
PS_API ps_status ps_table_compute(const ps_lengths* lengths, unsigned threads,
                                  ps_table** out);
PS_API void ps_table_free(ps_table* table);
PS_API size_t ps_table_size(const ps_table* table);
/* `exponents` receives m entries. */
PS_API ps_status ps_table_entry(const ps_table* table, size_t index, int* exponents,
                                char* buf, size_t cap, size_t* needed);

/* ---- volume ------------------------------------------------------------- */

PS_API ps_status ps_volume_exact(const ps_lengths* lengths, unsigned threads, char* buf,
                                 size_t cap, size_t* needed);
PS_API ps_status ps_volume_series(const ps_lengths* lengths, long terms, double* value,
                                  double* tail_bound);
PS_API ps_status ps_volume_mixed_partial(const ps_lengths* lengths, const int* exponents,
                                         size_t count, unsigned threads, char* buf,
                                         size_t cap, size_t* needed);

/* ---- equilateral spaces and identities ---------------------------------- */

PS_API ps_status ps_rho(int m, int k, char* buf, size_t cap, size_t* needed);
PS_API ps_status ps_equilateral_pairing(int m, const int* degrees, size_t count, char* buf,
                                        size_t cap, size_t* needed);
PS_API ps_status ps_sigma1_pairing(int m, int k, char* buf, size_t cap, size_t* needed);

/* ---- verification ------------------------------------------------------- */

typedef struct ps_verify_options {
  int min_m;
  int max_m;
  int cases;
  uint64_t seed;
  unsigned threads;
} ps_verify_options;

PS_API ps_status ps_verify_random(const ps_verify_options* options, ps_report** out);
PS_API ps_status ps_verify_corpus(const char* path, unsigned threads, ps_report** out);
PS_API void ps_report_free(ps_report* report);
PS_API int ps_report_ok(const ps_report* report);
PS_API int ps_report_cases(const ps_report* report);
PS_API int ps_report_checks(const ps_report* report);
PS_API size_t ps_report_failure_count(const ps_report* report);
PS_API const char* ps_report_failure(const ps_report* report, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* POLYSPACE_H */
