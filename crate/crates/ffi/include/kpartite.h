#ifndef KPARTITE_H
#define KPARTITE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum KpStatus {
  KP_STATUS_OK = 0,
  KP_STATUS_NULL_POINTER = 1,
  KP_STATUS_VERTEX_OUT_OF_RANGE = 2,
  KP_STATUS_INVALID_INPUT = 3,
  KP_STATUS_SIZE_LIMIT = 4,
  KP_STATUS_OUTSIDE_FAMILY = 5,
  KP_STATUS_CANONICAL = 6,
  KP_STATUS_BUFFER_TOO_SMALL = 7,
  KP_STATUS_INTERNAL = 8,
} KpStatus;

/**
 * Opaque graph handle.
 */
typedef struct KpGraph KpGraph;

/**
 * Which of the four family conditions hold, with the number of parts `k`
 * when they do (0 otherwise).
 */
typedef struct KpRecognition {
  bool complete_multipartite;
  size_t complete_multipartite_k;
  bool clique_union;
  size_t clique_union_k;
  bool degree_multipartite;
  size_t degree_multipartite_k;
  bool degree_clique_union;
  size_t degree_clique_union_k;
} KpRecognition;

/**
 * Lower bounds as doubles. Optional integers are -1 when absent. Use
 * [`kp_bounds_json`] for the exact rationals.
 */
typedef struct KpBounds {
  size_t n;
  size_t m;
  double caro_wei;
  double turan_alpha;
  size_t hansen_zheng;
  double myers_liu;
  double edwards_elphick;
  int64_t sharpened_alpha;
  int64_t sharpened_omega;
  int64_t exact_alpha;
  int64_t exact_omega;
} KpBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an edgeless graph on `n` vertices. Free with [`kp_graph_free`].
 */
struct KpGraph *kp_graph_new(size_t n);

/**
 * Releases a graph handle. Passing NULL is a no-op.
 *
 * # Safety
 * `g` must be NULL or a handle from this library that was not yet freed.
 */
void kp_graph_free(struct KpGraph *g);

/**
 * Adds the edge `{u, v}`; adding an existing edge is not an error.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
enum KpStatus kp_graph_add_edge(struct KpGraph *g, size_t u, size_t v);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t kp_graph_vertex_count(const struct KpGraph *g);

/**
 * Number of edges, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t kp_graph_edge_count(const struct KpGraph *g);

/**
 * Parses one graph6 string into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum KpStatus kp_graph_from_graph6(const char *text, struct KpGraph **out);

/**
 * Encodes the graph as graph6 into a new string stored in `*out`. Free it
 * with [`kp_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KpStatus kp_graph_to_graph6(const struct KpGraph *g, char **out);

/**
 * Releases a string returned by this library. Passing NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string from this library that was not yet freed.
 */
void kp_string_free(char *s);

/**
 * Message describing the last failure on this thread, or NULL. The pointer
 * stays valid until the next call into the library on this thread.
 */
const char *kp_last_error_message(void);

/**
 * Independence number.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KpStatus kp_independence_number(const struct KpGraph *g, size_t *out);

/**
 * Clique number.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KpStatus kp_clique_number(const struct KpGraph *g, size_t *out);

/**
 * A maximum independent set, written to `buf` (capacity `cap`).
 *
 * # Safety
 * `g` must be a live handle, `buf` must hold `cap` elements, `len` must be
 * writable.
 */
enum KpStatus kp_max_independent_set(const struct KpGraph *g, size_t *buf, size_t cap, size_t *len);

/**
 * A maximum clique, written to `buf` (capacity `cap`).
 *
 * # Safety
 * As for [`kp_max_independent_set`].
 */
enum KpStatus kp_max_clique(const struct KpGraph *g, size_t *buf, size_t cap, size_t *len);

/**
 * Independent set of size `k + 1` in a non-canonical graph with the degree
 * sequence of `k` disjoint cliques. Fails with `KP_STATUS_CANONICAL` on the
 * clique union itself and `KP_STATUS_OUTSIDE_FAMILY` on other degree
 * sequences.
 *
 * # Safety
 * As for [`kp_max_independent_set`].
 */
enum KpStatus kp_witness_independent_set(const struct KpGraph *g,
                                         size_t *buf,
                                         size_t cap,
                                         size_t *len);

/**
 * Clique of size `k + 1` in a non-canonical graph with the degree sequence
 * of a complete `k`-partite graph.
 *
 * # Safety
 * As for [`kp_max_independent_set`].
 */
enum KpStatus kp_witness_clique(const struct KpGraph *g, size_t *buf, size_t cap, size_t *len);

/**
 * Evaluates the four family conditions.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KpStatus kp_recognize(const struct KpGraph *g, struct KpRecognition *out);

/**
 * Lower bounds, plus exact values when `with_exact` is set.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KpStatus kp_bounds(const struct KpGraph *g, bool with_exact, struct KpBounds *out);

/**
 * The full bound report as JSON, with rationals written exactly (e.g.
 * `"50/17"`). Free the string with [`kp_string_free`].
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KpStatus kp_bounds_json(const struct KpGraph *g, bool with_exact, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KPARTITE_H */
