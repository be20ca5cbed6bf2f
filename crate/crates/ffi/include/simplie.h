#ifndef SIMPLIE_H
#define SIMPLIE_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  SIMPLIE_STATUS_OK = 0,
  SIMPLIE_STATUS_NULL_POINTER = 1,
  SIMPLIE_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON or a document that fails validation.
   */
  SIMPLIE_STATUS_INVALID_INPUT = 3,
  /**
   * A theorem's preconditions are unmet; a report is still produced.
   */
  SIMPLIE_STATUS_INAPPLICABLE = 4,
  /**
   * Independent computations disagreed or the library panicked.
   */
  SIMPLIE_STATUS_INTERNAL = 5,
} SimplieStatus;

typedef struct SimplieAction SimplieAction;

typedef struct SimplieGraph SimplieGraph;

typedef struct SimplieGroupoid SimplieGroupoid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *simplie_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *simplie_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void simplie_string_free(char *s);

/**
 * Parse a graph document.
 *
 * # Safety
 * `json` must be a valid C string; `out` must be writable.
 */
SimplieStatus simplie_graph_from_json(const char *json, SimplieGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from [`simplie_graph_from_json`], freed once.
 */
void simplie_graph_free(SimplieGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t simplie_graph_vertex_count(const SimplieGraph *g);

/**
 * Leavitt path algebra report as JSON. `field` is `"Q"` or `"Fp:<p>"`;
 * null means the rationals.
 *
 * # Safety
 * `g` must be a live handle, `field` null or a valid C string, `out` writable.
 */
SimplieStatus simplie_graph_lpa_report(const SimplieGraph *g, const char *field, char **out);

/**
 * Parse a finite groupoid document.
 *
 * # Safety
 * `json` must be a valid C string; `out` must be writable.
 */
SimplieStatus simplie_groupoid_from_json(const char *json, SimplieGroupoid **out);

/**
 * The pair groupoid on `n` units.
 *
 * # Safety
 * `out` must be writable.
 */
SimplieStatus simplie_groupoid_pair(size_t n, SimplieGroupoid **out);

/**
 * # Safety
 * `g` must be null or a groupoid handle from this library, freed once.
 */
void simplie_groupoid_free(SimplieGroupoid *g);

/**
 * Steinberg algebra report as JSON.
 *
 * # Safety
 * As for [`simplie_graph_lpa_report`].
 */
SimplieStatus simplie_groupoid_report(const SimplieGroupoid *g, const char *field, char **out);

/**
 * Theorem-vs-oracle Lie simplicity check over `F_p`. Writes whether both
 * verdicts agree to `agree` and the row as JSON to `out` (if non-null).
 * A `seed` of 0 selects the default seed.
 *
 * # Safety
 * `g` must be a live handle, `agree` writable, `out` null or writable.
 */
SimplieStatus simplie_groupoid_cross_check(const SimplieGroupoid *g,
                                           uint32_t p,
                                           uint64_t seed,
                                           bool *agree,
                                           char **out);

/**
 * Parse a self-similar action document.
 *
 * # Safety
 * `json` must be a valid C string; `out` must be writable.
 */
SimplieStatus simplie_action_from_json(const char *json, SimplieAction **out);

/**
 * # Safety
 * `a` must be null or an action handle from this library, freed once.
 */
void simplie_action_free(SimplieAction *a);

/**
 * Exel-Pardo algebra report as JSON. `depth` bounds the strongly fixed
 * path search; 0 selects the automatic bound.
 *
 * # Safety
 * As for [`simplie_graph_lpa_report`].
 */
SimplieStatus simplie_action_report(const SimplieAction *a,
                                    const char *field,
                                    size_t depth,
                                    char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIMPLIE_H */
