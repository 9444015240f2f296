#ifndef CCLOSURE_H
#define CCLOSURE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CC_STATUS_OK = 0,
  CC_STATUS_INVALID_ARGUMENT = 1,
  CC_STATUS_PRECONDITION = 2,
  CC_STATUS_INVALID_BIPARTITION = 3,
  CC_STATUS_RESOURCE_LIMIT = 4,
  CC_STATUS_INTERNAL = 5,
  CC_STATUS_PARSE = 6,
  CC_STATUS_IO = 7,
  CC_STATUS_NULL_POINTER = 8,
  CC_STATUS_BUFFER_TOO_SMALL = 9,
  CC_STATUS_PANIC = 10,
} CcStatus;

typedef enum {
  CC_PROBLEM_INDEPENDENT_SET = 0,
  CC_PROBLEM_DOMINATING_SET = 1,
  CC_PROBLEM_THRESHOLD_DOMINATING_SET = 2,
  CC_PROBLEM_BW_THRESHOLD_DOMINATING_SET = 3,
  CC_PROBLEM_INDUCED_MATCHING = 4,
  CC_PROBLEM_IRREDUNDANT_SET = 5,
} CcProblem;

/**
 * Which kernel `cc_kernelize` runs.
 */
typedef enum {
  CC_KERNEL_MODE_GENERAL = 0,
  /**
   * Bipartite kernel, thresholds in the maximum degree.
   */
  CC_KERNEL_MODE_BIPARTITE_DELTA = 1,
  /**
   * Bipartite kernel, thresholds in the closure.
   */
  CC_KERNEL_MODE_BIPARTITE_CLOSURE = 2,
} CcKernelMode;

/**
 * A graph plus optional coloring and bipartition.
 */
typedef struct CcGraph CcGraph;

typedef struct CcKernel CcKernel;

typedef struct CcSolution CcSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into the library on the same thread.
 */
const char *cc_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *cc_version(void);

/**
 * Releases a string returned by the library.
 *
 * # Safety
 * `s` is NULL or a string from this library not yet freed.
 */
void cc_string_free(char *s);

/**
 * Graph with vertices `0..n` and no edges.
 */
CcGraph *cc_graph_new(size_t n);

/**
 * Parses the text format.
 *
 * # Safety
 * `text` is a nul-terminated string; `out` is writable.
 */
CcStatus cc_graph_parse(const char *text, CcGraph **out);

/**
 * # Safety
 * `g` is NULL or a graph handle not yet freed.
 */
void cc_graph_free(CcGraph *g);

/**
 * # Safety
 * `g` is a live graph handle.
 */
CcStatus cc_graph_add_edge(CcGraph *g, uint32_t u, uint32_t v);

/**
 * Marks `v` white (`white` true) or black.
 *
 * # Safety
 * `g` is a live graph handle.
 */
CcStatus cc_graph_set_white(CcGraph *g, uint32_t v, bool white);

/**
 * Puts `v` on the left (`left` true) or right side.
 *
 * # Safety
 * `g` is a live graph handle.
 */
CcStatus cc_graph_set_left(CcGraph *g, uint32_t v, bool left);

/**
 * # Safety
 * `g` is a live graph handle.
 */
size_t cc_graph_vertex_count(const CcGraph *g);

/**
 * # Safety
 * `g` is a live graph handle.
 */
size_t cc_graph_edge_count(const CcGraph *g);

/**
 * Text serialization; free the result with `cc_string_free`.
 *
 * # Safety
 * `g` is a live graph handle; `out` is writable.
 */
CcStatus cc_graph_to_text(const CcGraph *g, char **out);

/**
 * Smallest `c` for which the graph is c-closed.
 *
 * # Safety
 * `g` is a live graph handle; `out` is writable.
 */
CcStatus cc_closure(const CcGraph *g, size_t *out);

/**
 * # Safety
 * `g` is a live graph handle; `out` is writable.
 */
CcStatus cc_is_c_closed(const CcGraph *g, size_t c, bool *out);

/**
 * Runs a kernel. `r` is ignored for problems without a threshold; `c = 0`
 * uses the graph's own closure.
 *
 * # Safety
 * `g` is a live graph handle; `out` is writable.
 */
CcStatus cc_kernelize(const CcGraph *g,
                      CcProblem problem,
                      size_t k,
                      size_t r,
                      size_t c,
                      CcKernelMode mode,
                      CcKernel **out);

/**
 * # Safety
 * `res` is NULL or a kernel handle not yet freed.
 */
void cc_kernel_free(CcKernel *res);

/**
 * True if the kernel settled the instance.
 *
 * # Safety
 * `res` is a live kernel handle.
 */
bool cc_kernel_is_decided(const CcKernel *res);

/**
 * The decision; `Precondition` if the kernel reduced instead.
 *
 * # Safety
 * `res` is a live kernel handle; `out` is writable.
 */
CcStatus cc_kernel_answer(const CcKernel *res, bool *out);

/**
 * Copy of the reduced graph (with its coloring and bipartition) and its
 * budget; `Precondition` if the kernel decided instead.
 *
 * # Safety
 * `res` is a live kernel handle; `out_graph` and `out_k` are writable.
 */
CcStatus cc_kernel_reduced(const CcKernel *res, CcGraph **out_graph, size_t *out_k);

/**
 * Witness of a Yes decision: vertex ids, or `u0 v0 u1 v1 …` for induced
 * matchings. `*out_len` receives the required length even when `cap` is
 * too small; it is 0 when there is no witness.
 *
 * # Safety
 * `res` is a live kernel handle; `buf` has room for `cap` values.
 */
CcStatus cc_kernel_witness(const CcKernel *res, uint32_t *buf, size_t cap, size_t *out_len);

/**
 * Outcome and rule trace as JSON; free with `cc_string_free`.
 *
 * # Safety
 * `res` is a live kernel handle; `out` is writable.
 */
CcStatus cc_kernel_trace_json(const CcKernel *res, char **out);

/**
 * Exact solver: branching for ds and tds, the exhaustive oracle otherwise.
 *
 * # Safety
 * `g` is a live graph handle; `out` is writable.
 */
CcStatus cc_solve(const CcGraph *g, CcProblem problem, size_t k, size_t r, CcSolution **out);

/**
 * # Safety
 * `sol` is NULL or a solution handle not yet freed.
 */
void cc_solution_free(CcSolution *sol);

/**
 * # Safety
 * `sol` is a live solution handle.
 */
bool cc_solution_found(const CcSolution *sol);

/**
 * Same layout as `cc_kernel_witness`.
 *
 * # Safety
 * `sol` is a live solution handle; `buf` has room for `cap` values.
 */
CcStatus cc_solution_witness(const CcSolution *sol, uint32_t *buf, size_t cap, size_t *out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CCLOSURE_H */
