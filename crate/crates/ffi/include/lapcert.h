#ifndef LAPCERT_H
#define LAPCERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every function that can fail.
 */
typedef enum LapcertStatus {
  LAPCERT_STATUS_OK = 0,
  LAPCERT_STATUS_NULL_POINTER = 1,
  LAPCERT_STATUS_INVALID_UTF8 = 2,
  LAPCERT_STATUS_PARSE_ERROR = 3,
  LAPCERT_STATUS_INVALID_GRAPH = 4,
  LAPCERT_STATUS_INVALID_PARAMETER = 5,
  LAPCERT_STATUS_PRECONDITION = 6,
  LAPCERT_STATUS_NOT_CONVERGED = 7,
  LAPCERT_STATUS_CAP_EXCEEDED = 8,
  LAPCERT_STATUS_INTERNAL = 9,
} LapcertStatus;

/**
 * Opaque graph handle.
 */
typedef struct LapcertGraph LapcertGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses one graph6 line.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LapcertStatus lapcert_graph_from_graph6(const char *text, struct LapcertGraph **out);

/**
 * Parses an edge list: a `n m` header followed by `m` lines `u v`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LapcertStatus lapcert_graph_from_edge_list(const char *text, struct LapcertGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2m` endpoints.
 *
 * # Safety
 * `endpoints` must point to `2 * m` values (it may be null when `m == 0`).
 */
enum LapcertStatus lapcert_graph_new(size_t n,
                                     const size_t *endpoints,
                                     size_t m,
                                     struct LapcertGraph **out);

/**
 * Releases a graph; null is ignored.
 *
 * # Safety
 * `graph` must come from this library and must not be used afterwards.
 */
void lapcert_graph_free(struct LapcertGraph *graph);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t lapcert_graph_vertex_count(const struct LapcertGraph *graph);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t lapcert_graph_edge_count(const struct LapcertGraph *graph);

/**
 * Copies the Laplacian eigenvalues in ascending order into `values`, which
 * must hold at least `n` entries; `mu2` and `mun` receive the second smallest
 * and the largest eigenvalue.
 *
 * # Safety
 * `graph` must be a live handle; `values` must hold `capacity` doubles.
 */
enum LapcertStatus lapcert_spectrum(const struct LapcertGraph *graph,
                                    double *values,
                                    size_t capacity,
                                    double *mu2,
                                    double *mun);

/**
 * Size of a maximum matching.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum LapcertStatus lapcert_matching_number(const struct LapcertGraph *graph, size_t *out);

/**
 * Whether `G - v` has a perfect matching for every vertex `v`.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum LapcertStatus lapcert_is_factor_critical(const struct LapcertGraph *graph, bool *out);

/**
 * Number of balloons of a connected graph.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum LapcertStatus lapcert_balloon_count(const struct LapcertGraph *graph, size_t *out);

/**
 * Spectrum, matching certificate, factor-criticality and balloons as JSON.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum LapcertStatus lapcert_analyze_json(const struct LapcertGraph *graph, char **out);

/**
 * Runs one verifier and returns its verdict as JSON. `theorem` is a tag such
 * as `"T3"` or a full name; `r` is read by the matching and balloon bounds and
 * `k` by the spanning-tree bound.
 *
 * # Safety
 * `graph` must be a live handle, `theorem` NUL-terminated and `out` valid.
 */
enum LapcertStatus lapcert_verify_json(const struct LapcertGraph *graph,
                                       const char *theorem,
                                       double r,
                                       size_t k,
                                       char **out);

/**
 * Serializes a graph to graph6 (at most 62 vertices).
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum LapcertStatus lapcert_graph_to_graph6(const struct LapcertGraph *graph, char **out);

/**
 * Message for the last failed call on this thread, or null after a success.
 * The pointer stays valid until the next call into the library on this thread.
 */
const char *lapcert_last_error_message(void);

/**
 * Releases a string returned by the library; null is ignored.
 *
 * # Safety
 * `text` must come from this library and must not be used afterwards.
 */
void lapcert_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LAPCERT_H */
