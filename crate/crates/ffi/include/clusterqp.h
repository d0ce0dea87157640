#ifndef CLUSTERQP_H
#define CLUSTERQP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum CqpStatus {
  CQP_STATUS_OK = 0,
  CQP_STATUS_NULL_POINTER = 1,
  CQP_STATUS_INVALID_UTF8 = 2,
  CQP_STATUS_INVALID_INPUT = 3,
  CQP_STATUS_OUT_OF_RANGE = 4,
  CQP_STATUS_COMPUTATION = 5,
  CQP_STATUS_BUFFER_TOO_SMALL = 6,
  CQP_STATUS_PANIC = 7,
} CqpStatus;

/**
 * Opaque seed handle.
 */
typedef struct CqpSeed CqpSeed;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or NULL. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *cqp_last_error_message(void);

/**
 * Release a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void cqp_string_free(char *s);

/**
 * Build a seed from its JSON form.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CqpStatus cqp_seed_from_json(const char *json, struct CqpSeed **out);

/**
 * Release a seed. NULL is ignored.
 *
 * # Safety
 * `seed` must come from this library and not have been freed.
 */
void cqp_seed_free(struct CqpSeed *seed);

/**
 * # Safety
 * `seed` must be a live handle; `out` must be writable.
 */
enum CqpStatus cqp_seed_rank(const struct CqpSeed *seed, size_t *out);

/**
 * Mutate at direction `k` (zero-based) with sign `+1` or `-1`, producing a new seed.
 *
 * # Safety
 * `seed` must be a live handle; `out` must be writable.
 */
enum CqpStatus cqp_seed_mutate(const struct CqpSeed *seed,
                               size_t k,
                               int32_t sign,
                               struct CqpSeed **out);

/**
 * Copy the exchange matrix, row-major, into `buf` of `len` entries (at least rank²).
 *
 * # Safety
 * `seed` must be a live handle and `buf` must hold `len` writable values.
 */
enum CqpStatus cqp_seed_exchange_matrix(const struct CqpSeed *seed, int64_t *buf, size_t len);

/**
 * JSON form of a seed; free the result with `cqp_string_free`.
 *
 * # Safety
 * `seed` must be a live handle; `out` must be writable.
 */
enum CqpStatus cqp_seed_to_json(const struct CqpSeed *seed, char **out);

/**
 * Decide whether a word (JSON or composition notation) is a trivial cluster
 * transformation at `seed`. Writes 1 or 0 to `out`.
 *
 * # Safety
 * `seed` must be a live handle, `word` NUL-terminated, `out` writable.
 */
enum CqpStatus cqp_word_is_trivial(const struct CqpSeed *seed, const char *word, int32_t *out);

/**
 * Type label (e.g. `E5(1)`) of toric data `{"vectors": [[a, b], ..]}`.
 *
 * # Safety
 * `json` must be NUL-terminated; `out` must be writable.
 */
enum CqpStatus cqp_classify_json(const char *json, char **out);

/**
 * Run every catalog check for `label`. Writes the JSON report to `report`
 * (may be NULL) and 1 or 0 to `passed`.
 *
 * # Safety
 * `label` must be NUL-terminated; `passed` writable; `report` NULL or writable.
 */
enum CqpStatus cqp_verify_label(const char *label, char **report, int32_t *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLUSTERQP_H */
