#ifndef VKNOT_H
#define VKNOT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum VkStatus {
  VK_STATUS_OK = 0,
  VK_STATUS_NULL_POINTER = 1,
  VK_STATUS_INVALID_UTF8 = 2,
  VK_STATUS_MALFORMED_TOKEN = 3,
  VK_STATUS_DUPLICATE_STRAND = 4,
  VK_STATUS_SIGN_MISMATCH = 5,
  VK_STATUS_ODD_OCCURRENCE = 6,
  VK_STATUS_UNKNOWN_CROSSING = 7,
  VK_STATUS_UNKNOWN_FIXTURE = 8,
  VK_STATUS_INVALID_ARGUMENT = 9,
  VK_STATUS_PANIC = 10,
} VkStatus;

/**
 * Opaque invariant bundle.
 */
typedef struct VkBundle VkBundle;

/**
 * Opaque signed Gauss code.
 */
typedef struct VkCode VkCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a signed Gauss code such as `"O1-O2-U1-O3+U2-U4-O4-U3+"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum VkStatus vk_code_parse(const char *text, struct VkCode **out);

/**
 * # Safety
 * `code` must be null or a handle from this library not yet freed.
 */
void vk_code_free(struct VkCode *code);

/**
 * Writes the canonical serialization of `code`.
 *
 * # Safety
 * `code` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_code_serialize(const struct VkCode *code, char **out);

/**
 * # Safety
 * `code` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_code_writhe(const struct VkCode *code, int64_t *out);

/**
 * # Safety
 * `code` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_code_crossing_count(const struct VkCode *code, size_t *out);

/**
 * # Safety
 * `code` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_code_mirror(const struct VkCode *code, struct VkCode **out);

/**
 * # Safety
 * `code` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_code_reverse(const struct VkCode *code, struct VkCode **out);

/**
 * # Safety
 * `code` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_code_crossing_change(const struct VkCode *code,
                                      uint32_t label,
                                      struct VkCode **out);

/**
 * Smooths crossing `label` against the orientation.
 *
 * # Safety
 * `code` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_code_smooth(const struct VkCode *code, uint32_t label, struct VkCode **out);

/**
 * # Safety
 * `code` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_bundle_compute(const struct VkCode *code, struct VkBundle **out);

/**
 * # Safety
 * `bundle` must be null or a handle from this library not yet freed.
 */
void vk_bundle_free(struct VkBundle *bundle);

/**
 * Writes the full JSON report.
 *
 * # Safety
 * `bundle` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_bundle_to_json(const struct VkBundle *bundle, char **out);

/**
 * Writes the affine index polynomial as display text.
 *
 * # Safety
 * `bundle` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_bundle_p(const struct VkBundle *bundle, char **out);

/**
 * Writes L^n as display text. `n` must be positive.
 *
 * # Safety
 * `bundle` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_bundle_l(const struct VkBundle *bundle, int64_t n, char **out);

/**
 * Writes F^n as display text. `n` must be positive.
 *
 * # Safety
 * `bundle` must be a live handle and `out` a writable pointer.
 */
enum VkStatus vk_bundle_f(const struct VkBundle *bundle, int64_t n, char **out);

/**
 * Compares two bundles. `distinguished` receives the verdict and `message`
 * a human readable description naming the first separating invariant.
 *
 * # Safety
 * Both bundles must be live handles and both out pointers writable.
 */
enum VkStatus vk_distinguish(const struct VkBundle *a,
                             const struct VkBundle *b,
                             bool *distinguished,
                             char **message);

/**
 * Loads a named diagram from the built-in corpus.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a writable pointer.
 */
enum VkStatus vk_fixture(const char *name, struct VkCode **out);

/**
 * Builds the n-twist family member, or its mutant when `mutant` is set.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum VkStatus vk_family_kn(size_t n, bool mutant, struct VkCode **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void vk_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library from the same thread.
 */
const char *vk_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VKNOT_H */
