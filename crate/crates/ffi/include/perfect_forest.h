#ifndef PERFECT_FOREST_H
#define PERFECT_FOREST_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PfStatus {
  PF_STATUS_OK = 0,
  PF_STATUS_NULL_POINTER = 1,
  PF_STATUS_INVALID_GRAPH = 2,
  PF_STATUS_DISCONNECTED = 3,
  PF_STATUS_ODD_ORDER = 4,
  PF_STATUS_PARSE_ERROR = 5,
  PF_STATUS_VERIFICATION_FAILED = 6,
  PF_STATUS_TOO_MANY_EDGES = 7,
  PF_STATUS_INVALID_ARGUMENT = 8,
  PF_STATUS_BUFFER_TOO_SMALL = 9,
  PF_STATUS_INTERNAL = 10,
} PfStatus;

typedef enum PfAlgorithm {
  PF_ALGORITHM_SPLIT = 0,
  PF_ALGORITHM_EDGE = 1,
} PfAlgorithm;

typedef enum PfFormat {
  PF_FORMAT_EDGES = 0,
  PF_FORMAT_DOT = 1,
} PfFormat;

/**
 * Opaque forest handle. Keeps its own copy of the host graph.
 */
typedef struct PfForest PfForest;

/**
 * Opaque graph handle.
 */
typedef struct PfGraph PfGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph on `n` vertices from `edge_count` vertex pairs.
 *
 * # Safety
 * `pairs` must point to `2 * edge_count` readable values; `out` must be a
 * valid pointer to write the new handle to.
 */
enum PfStatus pf_graph_from_edges(size_t n,
                                  const size_t *pairs,
                                  size_t edge_count,
                                  struct PfGraph **out);

/**
 * Parses an edge-list text (`u v` per line, `#` comments).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PfStatus pf_graph_parse(const char *text, struct PfGraph **out);

/**
 * Seeded random connected graph with `n` vertices and `m` edges.
 *
 * # Safety
 * `out` must be writable.
 */
enum PfStatus pf_graph_random_connected(size_t n, size_t m, uint64_t seed, struct PfGraph **out);

/**
 * # Safety
 * `graph` must be NULL or a handle from a `pf_graph_*` constructor that has
 * not been freed.
 */
void pf_graph_free(struct PfGraph *graph);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
size_t pf_graph_vertex_count(const struct PfGraph *graph);

/**
 * Number of edges, or 0 for NULL.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
size_t pf_graph_edge_count(const struct PfGraph *graph);

/**
 * Computes a perfect forest with the chosen algorithm.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum PfStatus pf_find_forest(const struct PfGraph *graph,
                             enum PfAlgorithm algorithm,
                             struct PfForest **out);

/**
 * # Safety
 * `forest` must be NULL or a live handle from [`pf_find_forest`].
 */
void pf_forest_free(struct PfForest *forest);

/**
 * # Safety
 * `forest` must be NULL or a live handle.
 */
size_t pf_forest_edge_count(const struct PfForest *forest);

/**
 * # Safety
 * `forest` must be NULL or a live handle.
 */
size_t pf_forest_component_count(const struct PfForest *forest);

/**
 * Copies the forest edges, in lexicographic order, into `out_pairs` as
 * `[a0, b0, a1, b1, ...]` with `a < b`. `capacity` counts edges, not values.
 *
 * # Safety
 * `forest` must be a live handle; `out_pairs` must have room for
 * `2 * capacity` values.
 */
enum PfStatus pf_forest_edges(const struct PfForest *forest, size_t *out_pairs, size_t capacity);

/**
 * Renders the forest as text. The returned string must be released with
 * [`pf_string_free`]. Returns NULL on failure.
 *
 * # Safety
 * `forest` must be NULL or a live handle.
 */
char *pf_forest_to_string(const struct PfForest *forest, enum PfFormat format);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void pf_string_free(char *s);

/**
 * Checks an arbitrary edge list against the perfect-forest definition.
 * `*out_valid` receives the verdict; a returned status other than `Ok`
 * means the check itself could not run.
 *
 * # Safety
 * `graph` must be a live handle; `pairs` must hold `2 * edge_count` values;
 * `out_valid` must be writable.
 */
enum PfStatus pf_verify_forest(const struct PfGraph *graph,
                               const size_t *pairs,
                               size_t edge_count,
                               bool *out_valid);

/**
 * Counts perfect forests by exhaustive enumeration (graphs with at most 24
 * edges).
 *
 * # Safety
 * `graph` must be a live handle; `out_count` must be writable.
 */
enum PfStatus pf_oracle_count(const struct PfGraph *graph, uint64_t *out_count);

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next `pf_*` call on the same thread.
 */
const char *pf_last_error_message(void);

/**
 * Static description of a status code.
 */
const char *pf_status_string(enum PfStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERFECT_FOREST_H */
