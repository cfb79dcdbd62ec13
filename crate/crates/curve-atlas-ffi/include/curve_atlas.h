#ifndef CURVE_ATLAS_H
#define CURVE_ATLAS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CaError {
  CA_ERROR_OK = 0,
  CA_ERROR_NULL_POINTER = 1,
  CA_ERROR_DOMAIN = 2,
  CA_ERROR_VALIDATION = 3,
  CA_ERROR_INTERNAL = 4,
} CaError;

typedef enum CaStatus {
  CA_STATUS_EMPTY = 0,
  CA_STATUS_NON_EMPTY = 1,
  CA_STATUS_UNKNOWN = 2,
} CaStatus;

/**
 * Opaque classification result.
 */
typedef struct CaVerdict CaVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *ca_last_error(void);

/**
 * Classify the triple with `g - d + r = alpha`.
 *
 * # Safety
 * `out` must be null or point to writable storage for one pointer. On
 * success `*out` owns a handle that must be passed to `ca_verdict_free`.
 */
enum CaError ca_classify(int64_t alpha, int64_t r, int64_t g, struct CaVerdict **out);

/**
 * # Safety
 * `v` must be null or a handle from `ca_classify` not yet freed.
 */
void ca_verdict_free(struct CaVerdict *v);

/**
 * # Safety
 * `v` must be a live handle; `out` must be writable.
 */
enum CaError ca_verdict_status(const struct CaVerdict *v, enum CaStatus *out);

/**
 * Degree of the classified triple.
 *
 * # Safety
 * `v` must be a live handle; `out` must be writable.
 */
enum CaError ca_verdict_degree(const struct CaVerdict *v, int64_t *out);

/**
 * Re-check the attached evidence independently of the verdict table.
 *
 * # Safety
 * `v` must be a live handle.
 */
enum CaError ca_verdict_recheck(const struct CaVerdict *v);

/**
 * The verdict, with irreducibility, as a JSON object.
 *
 * # Safety
 * `v` must be a live handle; `out` must be writable. On success `*out`
 * must be released with `ca_string_free`.
 */
enum CaError ca_verdict_json(const struct CaVerdict *v, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ca_string_free(char *s);

/**
 * Castelnuovo's bound for degree `d` in `P^r`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CaError ca_castelnuovo_bound(int64_t d, int64_t r, int64_t *out);

/**
 * Version string of the library; static, never freed.
 */
const char *ca_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CURVE_ATLAS_H */
