#ifndef TWOBRIDGE_H
#define TWOBRIDGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible entry point.
 */
typedef enum TbStatus {
  TB_STATUS_OK = 0,
  TB_STATUS_NULL_POINTER = 1,
  TB_STATUS_INVALID_ARGUMENT = 2,
  TB_STATUS_INAPPLICABLE = 3,
  TB_STATUS_BUFFER_TOO_SMALL = 4,
  TB_STATUS_OVERFLOW = 5,
  TB_STATUS_INTERNAL = 6,
} TbStatus;

/**
 * 0 = no, 1 = yes, 2 = unknown.
 */
typedef enum TbStrictness {
  TB_STRICTNESS_NO = 0,
  TB_STRICTNESS_YES = 1,
  TB_STRICTNESS_UNKNOWN = 2,
} TbStrictness;

/**
 * Opaque knot handle.
 */
typedef struct TbKnot TbKnot;

typedef struct TbSurface {
  int64_t boundary_slope;
  /**
   * Twice the surface's weight in the seminorm.
   */
  uint64_t doubled_weight;
  bool is_seifert;
} TbSurface;

typedef struct TbRational {
  int64_t num;
  int64_t den;
} TbRational;

typedef struct TbCasson {
  struct TbRational value;
  struct TbRational seminorm_value;
  struct TbRational correction;
  bool is_boundary_slope;
  enum TbStrictness strictness;
  bool alexander_ok;
  bool admissible;
} TbCasson;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build K(alpha, beta). Rejects even alpha, non-coprime pairs and the unknot.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum TbStatus tb_knot_new(int64_t alpha, int64_t beta, struct TbKnot **out);

/**
 * Parse `K(a,b)` or `J(l,m)`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum TbStatus tb_knot_parse(const char *spec, struct TbKnot **out);

/**
 * # Safety
 * `k` must come from this library and not have been freed; null is ignored.
 */
void tb_knot_free(struct TbKnot *k);

/**
 * # Safety
 * `k` must be a live handle; out pointers must be valid for writes.
 */
enum TbStatus tb_knot_alpha_beta(const struct TbKnot *k, int64_t *alpha, int64_t *beta);

/**
 * The text the handle was created from, normalized (`K(7,3)`, `J(2,-3)`).
 * Owned by the handle.
 *
 * # Safety
 * `k` must be a live handle or null.
 */
const char *tb_knot_label(const struct TbKnot *k);

/**
 * Number of essential surfaces (branched-surface expansions).
 *
 * # Safety
 * `k` must be a live handle or null (returns 0).
 */
size_t tb_surface_count(const struct TbKnot *k);

/**
 * # Safety
 * `k` must be a live handle; `out` valid for writes.
 */
enum TbStatus tb_surface_get(const struct TbKnot *k, size_t index, struct TbSurface *out);

/**
 * Seminorm ‖p/q‖ on a reduced slope.
 *
 * # Safety
 * `k` must be a live handle; `out` valid for writes.
 */
enum TbStatus tb_seminorm(const struct TbKnot *k, int64_t p, int64_t q, struct TbRational *out);

/**
 * Casson invariant of the surgery at p/q. The report is always written;
 * the status is `Inapplicable` when the slope is not admissible and the
 * value is only the formula's output.
 *
 * # Safety
 * `k` must be a live handle; `out` valid for writes.
 */
enum TbStatus tb_casson(const struct TbKnot *k, int64_t p, int64_t q, struct TbCasson *out);

/**
 * Growth rate λ′ of the Casson invariant along q → ∞.
 *
 * # Safety
 * `k` must be a live handle; `out` valid for writes.
 */
enum TbStatus tb_lambda_prime(const struct TbKnot *k, struct TbRational *out);

/**
 * M- and L-degrees of the Â-polynomial.
 *
 * # Safety
 * `k` must be a live handle; out pointers valid for writes.
 */
enum TbStatus tb_ahat_degrees(const struct TbKnot *k, uint64_t *deg_m, uint64_t *deg_l);

/**
 * Alexander polynomial coefficients, constant term first. `len` always
 * receives the full length; a short buffer yields `BufferTooSmall`.
 *
 * # Safety
 * `buf` must hold `cap` entries; `len` valid for writes.
 */
enum TbStatus tb_alexander(const struct TbKnot *k, int64_t *buf, size_t cap, size_t *len);

/**
 * Exceptional integral slopes where the Casson formula may vanish,
 * ascending. Buffer protocol as for `tb_alexander`.
 *
 * # Safety
 * `buf` must hold `cap` entries; `len` valid for writes.
 */
enum TbStatus tb_exceptional_slopes(const struct TbKnot *k, int64_t *buf, size_t cap, size_t *len);

/**
 * Message for the last failed call on this thread ("" after a success).
 * Valid until the next call into the library on the same thread.
 */
const char *tb_last_error(void);

/**
 * Static description of a status code.
 */
const char *tb_status_str(enum TbStatus s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWOBRIDGE_H */
