#ifndef LIECHECK_H
#define LIECHECK_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Marker for an unbounded [`LcBound::upper`].
 */
#define LC_UNBOUNDED UINT64_MAX

/**
 * Status codes returned by every fallible call.
 */
typedef enum LcStatus {
  LC_STATUS_OK = 0,
  LC_STATUS_NULL_POINTER = 1,
  LC_STATUS_INVALID_TYPE = 2,
  LC_STATUS_MALFORMED_WEIGHT = 3,
  LC_STATUS_NOT_A_ROOT = 4,
  LC_STATUS_PRECONDITION = 5,
  LC_STATUS_ITERATION_CAP = 6,
  LC_STATUS_INCONSISTENT = 7,
  LC_STATUS_IO = 8,
  LC_STATUS_BUFFER_TOO_SMALL = 9,
  LC_STATUS_INVALID_UTF8 = 10,
  LC_STATUS_PANIC = 11,
} LcStatus;

/**
 * Opaque root system handle.
 */
typedef struct LcRootSystem LcRootSystem;

/**
 * Lower and upper bound on a cohomology dimension; `upper` is `UINT64_MAX`
 * when no upper bound is known.
 */
typedef struct LcBound {
  uint64_t lower;
  uint64_t upper;
} LcBound;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a root system from an identifier such as "E8" or "C12".
 *
 * # Safety
 * `type_name` must be a NUL-terminated string and `out` a writable pointer.
 * The handle written to `out` must be released with [`lc_rootsys_free`].
 */
enum LcStatus lc_rootsys_new(const char *type_name, struct LcRootSystem **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `rs` must be null or a handle from [`lc_rootsys_new`] not yet freed.
 */
void lc_rootsys_free(struct LcRootSystem *rs);

/**
 * Rank of the root system, or 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
size_t lc_rootsys_rank(const struct LcRootSystem *rs);

/**
 * Number of positive roots, or 0 for a null handle.
 *
 * # Safety
 * `rs` must be null or a live handle.
 */
size_t lc_rootsys_positive_root_count(const struct LcRootSystem *rs);

/**
 * Writes the highest long root (or the highest short root when `short_root`)
 * in fundamental-weight coordinates.
 *
 * # Safety
 * `rs` must be a live handle and `out` must hold `len` values.
 */
enum LcStatus lc_rootsys_dominant_root(const struct LcRootSystem *rs,
                                       bool short_root,
                                       int64_t *out,
                                       size_t len);

/**
 * Dot action of a word of 1-based simple reflection labels (rightmost acts first).
 *
 * # Safety
 * `rs` must be a live handle; `word` must hold `word_len` labels (it may be
 * null when `word_len` is 0); `lambda` and `out` must hold `len` values.
 */
enum LcStatus lc_dot_word(const struct LcRootSystem *rs,
                          const size_t *word,
                          size_t word_len,
                          const int64_t *lambda,
                          int64_t *out,
                          size_t len);

/**
 * Decides whether λ and μ are linked under W ⋉ pZΦ, or under W ⋉ pX(T) when
 * `extended` is set.
 *
 * # Safety
 * `rs` must be a live handle; `lambda` and `mu` must hold `len` values and
 * `out` must be writable.
 */
enum LcStatus lc_linked(const struct LcRootSystem *rs,
                        const int64_t *lambda,
                        const int64_t *mu,
                        size_t len,
                        int64_t p,
                        bool extended,
                        bool *out);

/**
 * Bounds on dim H²(G, L(ω_j)) for Sp_{2n} in characteristic p from the
 * rule-backed structure provider.
 *
 * # Safety
 * `out` must be writable.
 */
enum LcStatus lc_typec_h2(size_t n, int64_t p, size_t j, struct LcBound *out);

/**
 * Copies the last error message of this thread into `buf`, NUL-terminated
 * and truncated to fit. Returns the full message length in bytes, or 0 when
 * there is no error.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t lc_last_error(char *buf, size_t len);

/**
 * Static description of a status code.
 */
const char *lc_status_str(enum LcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIECHECK_H */
