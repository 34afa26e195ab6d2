#ifndef TW_APPROX_H
#define TW_APPROX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TwAlgorithm {
  TW_ALGORITHM_RS4 = 0,
  TW_ALGORITHM_HALF45 = 1,
  TW_ALGORITHM_BG367 = 2,
  TW_ALGORITHM_MIN_DEGREE = 3,
  TW_ALGORITHM_GENERIC = 4,
} TwAlgorithm;

/**
 * Result code of every fallible call.
 */
typedef enum TwStatus {
  TW_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TW_STATUS_NULL_POINTER = 1,
  TW_STATUS_INVALID_ARGUMENT = 2,
  TW_STATUS_PARSE = 3,
  /**
   * The algorithm certified that the treewidth is at least `k`.
   */
  TW_STATUS_EXCEEDS = 4,
  /**
   * A decomposition failed validation.
   */
  TW_STATUS_INVALID = 5,
  /**
   * An internal error; the library state is unaffected.
   */
  TW_STATUS_INTERNAL = 6,
} TwStatus;

/**
 * Opaque decomposition handle.
 */
typedef struct TwDecomposition TwDecomposition;

/**
 * Opaque graph handle.
 */
typedef struct TwGraph TwGraph;

/**
 * Options of `tw_decompose`; start from `tw_options_default()`.
 */
typedef struct TwOptions {
  /**
   * A `TwAlgorithm` value.
   */
  uint32_t algorithm;
  /**
   * Fixed `k`, or 0 to search for the smallest `k` that succeeds.
   */
  uint32_t k;
  /**
   * Non-zero to grow the padding set gradually (search only).
   */
  uint8_t adaptive;
  uint32_t alpha_num;
  uint32_t alpha_den;
} TwOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *tw_last_error_message(void);

struct TwOptions tw_options_default(void);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2m` consecutive
 * endpoint ids. Self-loops and duplicates are ignored.
 */
enum TwStatus tw_graph_new(size_t n, const uint32_t *edges, size_t m, struct TwGraph **out);

/**
 * Parses a PACE `.gr` document (NUL-terminated UTF-8).
 */
enum TwStatus tw_graph_parse(const char *text, struct TwGraph **out);

void tw_graph_free(struct TwGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 */
size_t tw_graph_vertex_count(const struct TwGraph *g);

/**
 * Edge count after removing loops and duplicates, or 0 for a null handle.
 */
size_t tw_graph_edge_count(const struct TwGraph *g);

/**
 * Triangulates `g`. On `TW_STATUS_EXCEEDS` nothing is written to `out` and
 * the message states the certified bound.
 */
enum TwStatus tw_decompose(const struct TwGraph *g,
                           const struct TwOptions *options,
                           struct TwDecomposition **out);

void tw_decomposition_free(struct TwDecomposition *d);

/**
 * Width (largest bag size minus one), or 0 for a null handle.
 */
size_t tw_decomposition_width(const struct TwDecomposition *d);

/**
 * The `k` at which the decomposition was found (width + 1 for min-degree).
 */
uint32_t tw_decomposition_k_used(const struct TwDecomposition *d);

size_t tw_decomposition_bag_count(const struct TwDecomposition *d);

/**
 * Borrows bag `i` as a sorted id array owned by the handle.
 */
enum TwStatus tw_decomposition_bag(const struct TwDecomposition *d,
                                   size_t i,
                                   const uint32_t **vertices,
                                   size_t *len);

/**
 * Tree edges as `2 * count` bag indices written to `out`, which must hold
 * room for `2 * (bag_count - 1)` entries. Writes the edge count to `count`.
 */
enum TwStatus tw_decomposition_edges(const struct TwDecomposition *d, size_t *out, size_t *count);

/**
 * Checks the decomposition against `g`; `TW_STATUS_INVALID` lists the
 * violations in the error message.
 */
enum TwStatus tw_decomposition_validate(const struct TwDecomposition *d, const struct TwGraph *g);

/**
 * PACE `.td` text of the decomposition; release with `tw_string_free`.
 * Null for a null handle.
 */
char *tw_decomposition_to_pace(const struct TwDecomposition *d);

void tw_string_free(char *s);

/**
 * Exact treewidth for graphs of at most 14 vertices.
 */
enum TwStatus tw_exact_treewidth(const struct TwGraph *g, uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TW_APPROX_H */
