#ifndef LISTISO_H
#define LISTISO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ListIsoStatus {
  LIST_ISO_STATUS_OK = 0,
  LIST_ISO_STATUS_NULL_POINTER = 1,
  LIST_ISO_STATUS_INVALID_UTF8 = 2,
  LIST_ISO_STATUS_PARSE = 3,
  /**
   * Invalid input or an engine called outside its class.
   */
  LIST_ISO_STATUS_USAGE = 4,
  LIST_ISO_STATUS_INTERNAL = 5,
} ListIsoStatus;

/**
 * A validated instance.
 */
typedef struct ListIsoInstance ListIsoInstance;

/**
 * A yes/no answer with its mapping.
 */
typedef struct ListIsoResult ListIsoResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an instance from NUL-terminated JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ListIsoStatus listiso_instance_from_json(const char *json, struct ListIsoInstance **out);

/**
 * Builds an instance from flat arrays. Edges are `m` pairs stored as `2m`
 * consecutive entries. The list of G-vertex `u` is
 * `list_values[list_offsets[u]..list_offsets[u + 1]]`, so `list_offsets`
 * holds `ng + 1` entries.
 *
 * # Safety
 * Every pointer must be valid for the stated length; `out` must be valid.
 */
enum ListIsoStatus listiso_instance_from_arrays(size_t ng,
                                                const size_t *g_edges,
                                                size_t g_m,
                                                size_t nh,
                                                const size_t *h_edges,
                                                size_t h_m,
                                                const size_t *list_offsets,
                                                const size_t *list_values,
                                                struct ListIsoInstance **out);

/**
 * # Safety
 * `inst` must come from this library and not be freed twice. Null is ignored.
 */
void listiso_instance_free(struct ListIsoInstance *inst);

/**
 * Decides an instance. `algo` names an engine (`oracle`, `lists2`, `deg2`,
 * `tree`, `interval`, `treewidth`) or is `auto`/null for automatic choice.
 * `k` is the width bound for `treewidth`; pass a negative value for none.
 *
 * # Safety
 * `inst` must be a live handle, `algo` null or NUL-terminated, `out` valid.
 */
enum ListIsoStatus listiso_solve(const struct ListIsoInstance *inst,
                                 const char *algo,
                                 int64_t k,
                                 struct ListIsoResult **out);

/**
 * # Safety
 * `res` must be a live result handle or null (reported as no).
 */
bool listiso_result_is_yes(const struct ListIsoResult *res);

/**
 * Length of the mapping; 0 for a no answer.
 *
 * # Safety
 * `res` must be a live result handle or null.
 */
size_t listiso_result_mapping_len(const struct ListIsoResult *res);

/**
 * Copies the mapping into `buf`, which must hold at least
 * [`listiso_result_mapping_len`] entries.
 *
 * # Safety
 * `res` must be live and `buf` valid for `len` writes.
 */
enum ListIsoStatus listiso_result_mapping(const struct ListIsoResult *res, size_t *buf, size_t len);

/**
 * # Safety
 * `res` must come from this library and not be freed twice. Null is ignored.
 */
void listiso_result_free(struct ListIsoResult *res);

/**
 * Checks `mapping` (of length `len`) against the instance.
 *
 * # Safety
 * `inst` must be live, `mapping` valid for `len` reads, `valid` writable.
 */
enum ListIsoStatus listiso_verify(const struct ListIsoInstance *inst,
                                  const size_t *mapping,
                                  size_t len,
                                  bool *valid);

/**
 * Counts list-compatible isomorphisms by exhaustive search.
 *
 * # Safety
 * `inst` must be live and `count` writable.
 */
enum ListIsoStatus listiso_count(const struct ListIsoInstance *inst, uint64_t *count);

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *listiso_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LISTISO_H */
