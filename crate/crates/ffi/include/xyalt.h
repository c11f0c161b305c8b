#ifndef XYALT_H
#define XYALT_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum XyaltStatus {
  XYALT_STATUS_OK = 0,
  XYALT_STATUS_NULL_POINTER = 1,
  XYALT_STATUS_INVALID_ARGUMENT = 2,
  XYALT_STATUS_PARSE_ERROR = 3,
  XYALT_STATUS_BUDGET_EXCEEDED = 4,
  /**
   * A panic was caught at the boundary.
   */
  XYALT_STATUS_INTERNAL = 5,
} XyaltStatus;

/**
 * Opaque graph with two terminals.
 */
typedef struct XyaltGraph XyaltGraph;

/**
 * Message for the last failure on this thread; empty if none.
 */
const char *xyalt_last_error(void);

/**
 * Edgeless graph on `n` vertices with terminals `x` and `y`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum XyaltStatus xyalt_graph_new(size_t n, size_t x, size_t y, struct XyaltGraph **out);

/**
 * Parses the native text format or graph6 with a `terminals:` line.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum XyaltStatus xyalt_graph_parse(const char *text, struct XyaltGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards. Null is ignored.
 */
void xyalt_graph_free(struct XyaltGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
enum XyaltStatus xyalt_graph_add_edge(struct XyaltGraph *g, size_t u, size_t v);

/**
 * # Safety
 * `g` must be a live handle; outputs must be valid pointers.
 */
enum XyaltStatus xyalt_graph_size(const struct XyaltGraph *g, size_t *vertices, size_t *edges);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum XyaltStatus xyalt_is_planar(const struct XyaltGraph *g, bool *out);

/**
 * Membership in the class, decided by cutting at the terminals.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum XyaltStatus xyalt_is_member(const struct XyaltGraph *g, bool *out);

/**
 * Whether `g` is a minor-minimal non-member.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum XyaltStatus xyalt_is_obstruction(const struct XyaltGraph *g, bool *out);

/**
 * Minimum orientable genus. A `budget` of 0 means unlimited.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum XyaltStatus xyalt_genus(const struct XyaltGraph *g, uint64_t budget, size_t *out);

/**
 * Native text form of `g`; free it with `xyalt_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum XyaltStatus xyalt_graph_to_string(const struct XyaltGraph *g, char **out);

/**
 * The built-in obstruction catalog, one record per line; free it with
 * `xyalt_string_free`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum XyaltStatus xyalt_builtin_catalog(char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is ignored.
 */
void xyalt_string_free(char *s);

#endif  /* XYALT_H */
