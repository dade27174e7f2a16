#ifndef COREBUILDER_H
#define COREBUILDER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define CB_ALGO_AUTO 0

#define CB_ALGO_FOREST 1

#define CB_ALGO_TREEWIDTH 2

#define CB_ALGO_VC 3

#define CB_ALGO_ORACLE 4

typedef enum {
  CB_STATUS_OK = 0,
  CB_STATUS_NULL_POINTER = 1,
  CB_STATUS_INVALID_INPUT = 2,
  CB_STATUS_PARSE = 3,
  CB_STATUS_INVALID_DECOMPOSITION = 4,
  CB_STATUS_UNSUPPORTED = 5,
  CB_STATUS_CAP_EXCEEDED = 6,
  CB_STATUS_INTERNAL = 7,
  CB_STATUS_PANIC = 8,
} CbStatus;

/**
 * Opaque solver answer handle.
 */
typedef struct CbAnswer CbAnswer;

/**
 * Opaque graph handle.
 */
typedef struct CbGraph CbGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or NULL. The pointer
 * stays valid until the next failing call on this thread.
 */
const char *cb_last_error(void);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2 * m`
 * consecutive endpoint ids.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values unless `m == 0`; `out` must
 * be writable.
 */
CbStatus cb_graph_from_edges(size_t n, const size_t *edges, size_t m, CbGraph **out);

/**
 * Parses a graph in the `p edge` text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
CbStatus cb_graph_parse(const char *text, CbGraph **out);

/**
 * # Safety
 * `graph` must be NULL or a handle from this library not yet freed.
 */
void cb_graph_free(CbGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle.
 */
size_t cb_graph_vertex_count(const CbGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle.
 */
size_t cb_graph_edge_count(const CbGraph *graph);

/**
 * Writes the number of vertices in the k-core of `graph` to `out`.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
CbStatus cb_k_core_size(const CbGraph *graph, size_t k, size_t *out);

/**
 * Decides whether at most `b` added edges give a k-core of at least `p`
 * vertices, using one of the `CB_ALGO_*` solvers.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
CbStatus cb_solve(const CbGraph *graph,
                  size_t k,
                  size_t b,
                  size_t p,
                  uint32_t algo,
                  CbAnswer **out);

/**
 * # Safety
 * `answer` must be NULL or a handle from this library not yet freed.
 */
void cb_answer_free(CbAnswer *answer);

/**
 * # Safety
 * `answer` must be a live handle.
 */
bool cb_answer_feasible(const CbAnswer *answer);

/**
 * Number of edges the certificate adds; 0 for a no answer.
 *
 * # Safety
 * `answer` must be a live handle.
 */
size_t cb_answer_edge_count(const CbAnswer *answer);

/**
 * Copies the added edges as `2 * cb_answer_edge_count` endpoint ids into
 * `buf`, which holds `capacity` values.
 *
 * # Safety
 * `answer` must be a live handle; `buf` must hold `capacity` writable values.
 */
CbStatus cb_answer_edges(const CbAnswer *answer, size_t *buf, size_t capacity);

/**
 * Size of the k-core after the certificate's edges; 0 for a no answer.
 *
 * # Safety
 * `answer` must be a live handle.
 */
size_t cb_answer_core_size(const CbAnswer *answer);

/**
 * Checks independently that adding the `m` given edges (at most `b`) yields
 * a k-core of at least `p` vertices. Writes the verdict to `valid`; when
 * rejected, [`cb_last_error`] holds the reason.
 *
 * # Safety
 * `graph` must be a live handle; `edges` must point to `2 * m` readable
 * values unless `m == 0`; `valid` must be writable.
 */
CbStatus cb_verify(const CbGraph *graph,
                   size_t k,
                   size_t b,
                   size_t p,
                   const size_t *edges,
                   size_t m,
                   bool *valid);

/**
 * Writes whether the non-increasing sequence `degrees[0..len]` is graphic.
 *
 * # Safety
 * `degrees` must point to `len` readable values unless `len == 0`; `out`
 * must be writable.
 */
CbStatus cb_erdos_gallai(const size_t *degrees, size_t len, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COREBUILDER_H */
