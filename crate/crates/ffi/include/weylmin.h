#ifndef WEYLMIN_H
#define WEYLMIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes.
typedef enum WeylminStatus {
  WEYLMIN_STATUS_OK = 0,
  WEYLMIN_STATUS_NULL_POINTER = 1,
  WEYLMIN_STATUS_INVALID_TYPE = 2,
  WEYLMIN_STATUS_INVALID_ARGUMENT = 3,
  // The search ran to the depth limit without finding an element.
  WEYLMIN_STATUS_LIMIT_EXCEEDED = 4,
  // A witness failed verification.
  WEYLMIN_STATUS_INVALID_WITNESS = 5,
  WEYLMIN_STATUS_PANIC = 99,
} WeylminStatus;

// Opaque root system.
typedef struct WeylminRootSystem WeylminRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Last error message on this thread, or NULL. Valid until the next failing call.
const char *weylmin_last_error(void);

// Library version as a static NUL-terminated string.
const char *weylmin_version(void);

// Build a root system from a type string such as "E6" or "A2xB3".
//
// # Safety
// `type_string` must be NUL-terminated; `out_handle` must be writable.
enum WeylminStatus weylmin_root_system_new(const char *type_string,
                                           struct WeylminRootSystem **out_handle);

// Release a handle. NULL is ignored.
//
// # Safety
// `handle` must come from `weylmin_root_system_new` and not be freed twice.
void weylmin_root_system_free(struct WeylminRootSystem *handle);

// Rank, or 0 for NULL.
//
// # Safety
// `handle` must be NULL or valid.
uintptr_t weylmin_rank(const struct WeylminRootSystem *handle);

// Number of positive roots, or 0 for NULL.
//
// # Safety
// `handle` must be NULL or valid.
uintptr_t weylmin_num_positive_roots(const struct WeylminRootSystem *handle);

// ℓ_Δ.
//
// # Safety
// `handle` valid; `out_value` writable.
enum WeylminStatus weylmin_ell_delta(const struct WeylminRootSystem *handle, uintptr_t *out_value);

// ℓ^sd_Δ.
//
// # Safety
// `handle` valid; `out_value` writable.
enum WeylminStatus weylmin_ell_sd_delta(const struct WeylminRootSystem *handle,
                                        uintptr_t *out_value);

// ℓ⁻_h(λ) with `h` and `lambda` in fundamental-weight coordinates (length = rank).
// With `h_is_coweight` nonzero, `h` is read in fundamental-coweight coordinates.
// `depth_limit` 0 means no limit. The witness word (1-based letters, rightmost
// applied first) is copied into `out_word` when it fits in `word_capacity`;
// `out_word_len` always receives its length.
//
// # Safety
// Pointers must be valid for the stated lengths; output pointers may be NULL.
enum WeylminStatus weylmin_ell_minus(const struct WeylminRootSystem *handle,
                                     const int64_t *h,
                                     int32_t h_is_coweight,
                                     const int64_t *lambda,
                                     uintptr_t len,
                                     uintptr_t depth_limit,
                                     uintptr_t *out_value,
                                     uint32_t *out_word,
                                     uintptr_t word_capacity,
                                     uintptr_t *out_word_len);

// Check that `word` is reduced and turns the pairing of `lambda` with `h`
// negative. Returns `WEYLMIN_STATUS_OK` for a valid witness and
// `WEYLMIN_STATUS_INVALID_WITNESS` otherwise; `out_length` gets the length of
// the group element.
//
// # Safety
// Pointers must be valid for the stated lengths; `out_length` may be NULL.
enum WeylminStatus weylmin_verify_witness(const struct WeylminRootSystem *handle,
                                          const int64_t *h,
                                          int32_t h_is_coweight,
                                          const int64_t *lambda,
                                          uintptr_t len,
                                          const uint32_t *word,
                                          uintptr_t word_len,
                                          uintptr_t *out_length);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WEYLMIN_H */
