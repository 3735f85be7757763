#ifndef ULRICH_H
#define ULRICH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum UlrichStatus {
  ULRICH_STATUS_OK = 0,
  ULRICH_STATUS_NULL_ARGUMENT = 1,
  ULRICH_STATUS_INVALID_UTF8 = 2,
  ULRICH_STATUS_PARSE = 3,
  ULRICH_STATUS_INVALID_INPUT = 4,
  ULRICH_STATUS_NOT_DUALIZABLE = 5,
  ULRICH_STATUS_FAMILY = 6,
  ULRICH_STATUS_SEARCH = 7,
  ULRICH_STATUS_OUT_OF_RANGE = 8,
  ULRICH_STATUS_PANIC = 9,
} UlrichStatus;

/**
 * A blocked partition.
 */
typedef struct UlrichPartition UlrichPartition;

/**
 * The outcome of an enumeration.
 */
typedef struct UlrichReport UlrichReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread; empty if none. Valid until
 * the next call into this library from the same thread.
 */
const char *ulrich_last_error(void);

/**
 * Library version as a static string.
 */
const char *ulrich_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ulrich_string_free(char *s);

/**
 * Parses a partition such as `"5|3,-1,-2,-4|-5"`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum UlrichStatus ulrich_partition_parse(const char *text, struct UlrichPartition **out);

/**
 * Builds from entries and block lengths.
 *
 * # Safety
 * `entries` must point to `sum(lengths)` values and `lengths` to
 * `num_blocks` values.
 */
enum UlrichStatus ulrich_partition_new(const size_t *lengths,
                                       size_t num_blocks,
                                       const int64_t *entries,
                                       size_t num_entries,
                                       struct UlrichPartition **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed. Null is ignored.
 */
void ulrich_partition_free(struct UlrichPartition *p);

/**
 * Writes the `a|b|c` form; release with [`ulrich_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_partition_to_string(const struct UlrichPartition *p, char **out);

/**
 * `N`, the sum of `l_i l_j` over pairs of blocks.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_partition_dimension(const struct UlrichPartition *p, uint64_t *out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_partition_len(const struct UlrichPartition *p, size_t *out);

/**
 * Copies the entries into `buf`, which must hold at least
 * `ulrich_partition_len` values.
 *
 * # Safety
 * `p` must be a live handle; `buf` must be writable for `cap` values.
 */
enum UlrichStatus ulrich_partition_entries(const struct UlrichPartition *p,
                                           int64_t *buf,
                                           size_t cap);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_partition_is_ulrich(const struct UlrichPartition *p, bool *out);

/**
 * Translate so the last entry is 0.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_partition_canonicalize(const struct UlrichPartition *p,
                                                struct UlrichPartition **out);

/**
 * Negate and reverse; the type is reversed.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_partition_symmetric(const struct UlrichPartition *p,
                                             struct UlrichPartition **out);

/**
 * Fails with `NotDualizable` when some pair has not met by time `N + 1`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_partition_dual(const struct UlrichPartition *p,
                                        struct UlrichPartition **out);

/**
 * Builds a family member, e.g. `("elongated", "1,2")`.
 *
 * # Safety
 * `name` and `params` must be nul-terminated strings; `out` must be writable.
 */
enum UlrichStatus ulrich_family_build(const char *name,
                                      const char *params,
                                      struct UlrichPartition **out);

/**
 * Enumerates the Ulrich classes of a type by time-branching search.
 * `budget_seconds <= 0` means no limit; a capped run still succeeds and
 * reports `exhausted = false`.
 *
 * # Safety
 * `lengths` must point to `num_blocks` values; `out` must be writable.
 */
enum UlrichStatus ulrich_enumerate(const size_t *lengths,
                                   size_t num_blocks,
                                   double budget_seconds,
                                   struct UlrichReport **out);

/**
 * # Safety
 * `r` must come from this library and not have been freed. Null is ignored.
 */
void ulrich_report_free(struct UlrichReport *r);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_report_count(const struct UlrichReport *r, size_t *out);

/**
 * Whether the report is a complete classification.
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_report_exhausted(const struct UlrichReport *r, bool *out);

/**
 * A copy of class `index` (canonical form, sorted order).
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum UlrichStatus ulrich_report_class(const struct UlrichReport *r,
                                      size_t index,
                                      struct UlrichPartition **out);

/**
 * `rk E_λ` in decimal; release with [`ulrich_string_free`].
 *
 * # Safety
 * `lambda` must be a nul-terminated string; `out` must be writable.
 */
enum UlrichStatus ulrich_bundle_rank(const char *lambda, char **out);

/**
 * `h^0(E_λ)` in decimal; release with [`ulrich_string_free`].
 *
 * # Safety
 * `lambda` must be a nul-terminated string; `out` must be writable.
 */
enum UlrichStatus ulrich_h0(const char *lambda, char **out);

/**
 * Cohomology of `E_λ(-t)`: writes the degree `q` (or -1 if everything
 * vanishes) and the dimension in decimal (`"0"` if everything vanishes).
 *
 * # Safety
 * `lambda` must be a nul-terminated string; outputs must be writable.
 */
enum UlrichStatus ulrich_cohomology(const char *lambda,
                                    int64_t twist,
                                    int64_t *q_out,
                                    char **dim_out);

/**
 * Ulrich test through Borel-Weil-Bott vanishing.
 *
 * # Safety
 * `lambda` must be a nul-terminated string; `out` must be writable.
 */
enum UlrichStatus ulrich_is_ulrich_via_bwb(const char *lambda, bool *out);

/**
 * Degree of `F(k_1, ..., k_r; n)` under the polarization with weights
 * `a` (all ones when `a` is null), in decimal.
 *
 * # Safety
 * `ks` must point to `r` values and `a`, if non-null, to `r` values;
 * `out` must be writable.
 */
enum UlrichStatus ulrich_flag_degree(const size_t *ks,
                                     size_t r,
                                     size_t n,
                                     const uint64_t *a,
                                     char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ULRICH_H */
