#ifndef EVENSPAN_H
#define EVENSPAN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EvenspanStatus {
  EVENSPAN_STATUS_OK = 0,
  /**
   * The graph is regular bipartite, so no weakly even tree exists.
   */
  EVENSPAN_STATUS_NO_SOLUTION = 2,
  EVENSPAN_STATUS_INVALID_INPUT = 3,
  EVENSPAN_STATUS_CONTRACT_FAILURE = 4,
  EVENSPAN_STATUS_NULL_POINTER = 5,
  EVENSPAN_STATUS_BUFFER_TOO_SMALL = 6,
  EVENSPAN_STATUS_PANIC = 7,
} EvenspanStatus;

/**
 * Opaque multigraph handle.
 */
typedef struct EvenspanGraph EvenspanGraph;

/**
 * Opaque spanning tree handle.
 */
typedef struct EvenspanTree EvenspanTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread; empty if none. The
 * pointer stays valid until the next failing call on this thread.
 */
const char *evenspan_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *evenspan_version(void);

/**
 * New graph with `vertex_count` vertices and no edges.
 */
EvenspanGraph *evenspan_graph_new(size_t vertex_count);

/**
 * Parses an edge list or graph JSON document into `*out`.
 */
EvenspanStatus evenspan_graph_parse(const char *text, EvenspanGraph **out);

/**
 * Releases a graph. Null is ignored.
 */
void evenspan_graph_free(EvenspanGraph *g);

/**
 * Adds edge `{u, v}`, writing its id to `edge_out` when that is non-null.
 */
EvenspanStatus evenspan_graph_add_edge(EvenspanGraph *g, size_t u, size_t v, size_t *edge_out);

/**
 * Number of vertices; 0 for null.
 */
size_t evenspan_graph_vertex_count(const EvenspanGraph *g);

/**
 * Number of edges; 0 for null.
 */
size_t evenspan_graph_edge_count(const EvenspanGraph *g);

/**
 * Endpoints of edge `e`.
 */
EvenspanStatus evenspan_graph_endpoints(const EvenspanGraph *g, size_t e, size_t *u, size_t *v);

/**
 * Builds a spanning weakly even (w, lambda)-tree into `*out`. Returns
 * `NoSolution` with `*out` null when the graph is regular bipartite.
 */
EvenspanStatus evenspan_solve(const EvenspanGraph *g, size_t w, uint8_t lambda, EvenspanTree **out);

/**
 * As [`evenspan_solve`], writing the tree JSON (or the no-solution
 * certificate) to `*json_out`, to be released with [`evenspan_string_free`].
 */
EvenspanStatus evenspan_solve_json(const EvenspanGraph *g, size_t w, uint8_t lambda, char **json_out);

/**
 * Releases a tree. Null is ignored.
 */
void evenspan_tree_free(EvenspanTree *t);

/**
 * Number of tree edges; 0 for null.
 */
size_t evenspan_tree_edge_count(const EvenspanTree *t);

/**
 * Copies the tree's edge ids (ascending) into `buf`, which must hold
 * [`evenspan_tree_edge_count`] entries.
 */
EvenspanStatus evenspan_tree_edges(const EvenspanTree *t, size_t *buf, size_t len);

/**
 * Bipartition type (0 or 1) of vertex `v` in the tree.
 */
EvenspanStatus evenspan_tree_vertex_type(const EvenspanTree *t, size_t v, uint8_t *type_out);

/**
 * Checks that `t` is a spanning weakly even tree of `g`.
 */
EvenspanStatus evenspan_verify(const EvenspanGraph *g, const EvenspanTree *t, bool *passed);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void evenspan_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EVENSPAN_H */
