/* C interface to the ndarc digraph arc-colouring library. */

#ifndef NDARC_H
#define NDARC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Algorithm selector for [`ndarc_colour`].
 */
typedef enum {
  /**
   * Pick the applicable algorithm with the smallest colour bound.
   */
  NDARC_ALGO_AUTO = 0,
  /**
   * Round-robin scheme for complete digraphs.
   */
  NDARC_ALGO_COMPLETE = 1,
  /**
   * Peel-and-extend scheme for digraphs whose underlying graph is a
   * tree.
   */
  NDARC_ALGO_TREE = 2,
  /**
   * Two-matching repair for bipartite digraphs.
   */
  NDARC_ALGO_BIPARTITE = 3,
  /**
   * Underlying-graph edge colouring for digraphs with no opposite
   * arc pairs.
   */
  NDARC_ALGO_ORIENTED = 4,
  /**
   * Regularise-and-factor scheme; always applicable.
   */
  NDARC_ALGO_FACTOR = 5,
  /**
   * Bipartite-layer scheme; always applicable.
   */
  NDARC_ALGO_LAYERED = 6,
} NdarcAlgo;

/**
 * Result code returned by every fallible function.
 */
typedef enum {
  /**
   * The call succeeded.
   */
  NDARC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  NDARC_STATUS_NULL_POINTER = 1,
  /**
   * An argument was malformed: a loop or duplicate arc, a vertex or
   * colour out of range, or a buffer of the wrong length.
   */
  NDARC_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The requested algorithm does not apply to this digraph.
   */
  NDARC_STATUS_INAPPLICABLE = 3,
  /**
   * A search exhausted its colour cap or node budget.
   */
  NDARC_STATUS_RESOURCE_EXHAUSTED = 4,
  /**
   * An internal invariant failed or a panic was caught.
   */
  NDARC_STATUS_INTERNAL = 5,
} NdarcStatus;

/**
 * Opaque digraph handle. Create with [`ndarc_digraph_new`], release
 * with [`ndarc_digraph_free`].
 */
typedef struct NdarcDigraph NdarcDigraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a digraph from parallel tail and head arrays of length
 * `arc_count` and writes the new handle to `out`.
 *
 * `tails` and `heads` may be null only when `arc_count` is zero.
 * Rejects loops, duplicate arcs, and endpoints at or above `order`.
 *
 * # Safety
 *
 * `tails` and `heads` must point to `arc_count` readable elements,
 * and `out` must be a valid writable pointer.
 */
NdarcStatus ndarc_digraph_new(size_t order,
                              const size_t *tails,
                              const size_t *heads,
                              size_t arc_count,
                              NdarcDigraph **out);

/**
 * Releases a handle created by [`ndarc_digraph_new`]. Null is a no-op.
 *
 * # Safety
 *
 * `d` must be null or a handle not yet freed.
 */
void ndarc_digraph_free(NdarcDigraph *d);

/**
 * Returns the vertex count, or 0 for a null handle.
 *
 * # Safety
 *
 * `d` must be null or a live handle.
 */
size_t ndarc_digraph_order(const NdarcDigraph *d);

/**
 * Returns the arc count, or 0 for a null handle.
 *
 * # Safety
 *
 * `d` must be null or a live handle.
 */
size_t ndarc_digraph_arc_count(const NdarcDigraph *d);

/**
 * Writes the degree-based lower bound on the number of colours any
 * distinguishing arc colouring needs.
 *
 * # Safety
 *
 * `d` must be a live handle and `out_bound` a valid writable pointer.
 */
NdarcStatus ndarc_lower_bound(const NdarcDigraph *d, size_t *out_bound);

/**
 * Colours the digraph with the requested algorithm and writes one
 * colour per arc, in the order the arcs were supplied, to
 * `colours_out` (length = arc count). Colours start at 1.
 * `colours_used_out` and `bound_out` are optional; when non-null they
 * receive the number of distinct colours and the algorithm's promised
 * bound. The result is re-verified before returning; a colouring that
 * fails its own check yields [`NdarcStatus::Internal`].
 *
 * # Safety
 *
 * `d` must be a live handle and `colours_out` must point to as many
 * writable elements as the digraph has arcs.
 */
NdarcStatus ndarc_colour(const NdarcDigraph *d,
                         NdarcAlgo algo,
                         size_t *colours_out,
                         size_t *colours_used_out,
                         size_t *bound_out);

/**
 * Computes the exact minimum colour count. `max_colours` of 0 means
 * twice the larger degree bound (which always suffices); `node_budget`
 * of 0 means the default per-colour-count budget. When `colours_out`
 * is non-null it receives a witness colouring, one colour per arc.
 *
 * # Safety
 *
 * `d` must be a live handle, `ndi_out` a valid writable pointer, and
 * `colours_out` null or a buffer with as many writable elements as the
 * digraph has arcs.
 */
NdarcStatus ndarc_exact_ndi(const NdarcDigraph *d,
                            size_t max_colours,
                            uint64_t node_budget,
                            size_t *colours_out,
                            size_t *ndi_out);

/**
 * Checks a colouring supplied as one colour per arc (length must equal
 * the arc count, colours start at 1) and writes whether it is proper
 * and gives adjacent vertices distinct colour-set pairs.
 *
 * # Safety
 *
 * `d` must be a live handle, `colours` must point to `colour_count`
 * readable elements, and `result_out` must be a valid writable
 * pointer.
 */
NdarcStatus ndarc_is_nd(const NdarcDigraph *d,
                        const size_t *colours,
                        size_t colour_count,
                        bool *result_out);

/**
 * Returns a static NUL-terminated description of a status code.
 */
const char *ndarc_status_message(NdarcStatus status);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* NDARC_H */
