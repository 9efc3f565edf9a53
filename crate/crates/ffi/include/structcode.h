#ifndef STRUCTCODE_H
#define STRUCTCODE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of a call.
 */
typedef enum ScStatus {
  SC_STATUS_OK = 0,
  /**
   * The call succeeded and the answer is negative.
   */
  SC_STATUS_FALSE = 1,
  SC_STATUS_PARSE = 2,
  SC_STATUS_PRECONDITION = 3,
  SC_STATUS_NULL_ARGUMENT = 4,
  SC_STATUS_INVALID_UTF8 = 5,
  SC_STATUS_BUFFER_TOO_SMALL = 6,
  SC_STATUS_PANIC = 7,
} ScStatus;

/**
 * A directed graph.
 */
typedef struct ScDigraph ScDigraph;

/**
 * An undirected graph.
 */
typedef struct ScGraph ScGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the library.
 */
const char *sc_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string returned by this library that has not been freed.
 */
void sc_string_free(char *s);

/**
 * Parses a digraph from `v`/`e` lines.
 *
 * # Safety
 * `src` must be a valid C string and `out` a valid pointer.
 */
enum ScStatus sc_digraph_parse(const char *src, struct ScDigraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void sc_digraph_free(struct ScDigraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sc_digraph_vertex_count(const struct ScDigraph *g);

/**
 * Writes the digraph in graph-file format to `*out`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum ScStatus sc_digraph_to_text(const struct ScDigraph *g, char **out);

/**
 * Parses an undirected graph from `v`/`e` lines.
 *
 * # Safety
 * `src` must be a valid C string and `out` a valid pointer.
 */
enum ScStatus sc_graph_parse(const char *src, struct ScGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void sc_graph_free(struct ScGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sc_graph_vertex_count(const struct ScGraph *g);

/**
 * Writes the graph in graph-file format to `*out`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum ScStatus sc_graph_to_text(const struct ScGraph *g, char **out);

/**
 * Marker's encoding of an irreflexive digraph.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum ScStatus sc_marker_encode(const struct ScDigraph *g, struct ScGraph **out);

/**
 * Decodes a graph produced by Marker's encoding.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum ScStatus sc_marker_decode(const struct ScGraph *h, struct ScDigraph **out);

/**
 * `SC_STATUS_OK` when the digraphs are isomorphic, `SC_STATUS_FALSE` when not.
 *
 * # Safety
 * Both handles must be live.
 */
enum ScStatus sc_digraph_isomorphic(const struct ScDigraph *a, const struct ScDigraph *b);

/**
 * `SC_STATUS_OK` when the graphs are isomorphic, `SC_STATUS_FALSE` when not.
 *
 * # Safety
 * Both handles must be live.
 */
enum ScStatus sc_graph_isomorphic(const struct ScGraph *a, const struct ScGraph *b);

/**
 * Membership in `L(G)` of an element written as a JSON term array such as `["3/4",0]`.
 * Returns `SC_STATUS_OK` for members and `SC_STATUS_FALSE` otherwise.
 *
 * # Safety
 * `g` must be a live handle and `element` a valid C string.
 */
enum ScStatus sc_fs_member(const struct ScDigraph *g, const char *element);

/**
 * The daisy of `S ∩ [0, bound)`, with `prefix[n] != 0` meaning `n ∈ S` for `n < len`.
 *
 * # Safety
 * `prefix` must point to `len` readable bytes (or be null with `len == 0`), and `out` must be
 * valid.
 */
enum ScStatus sc_daisy_encode(const uint8_t *prefix,
                              size_t len,
                              uint64_t bound,
                              struct ScGraph **out);

/**
 * Decodes a daisy into `buf` (one byte per index, 1 for members). The number of petals is
 * written to `*len` even when `buf` is too small.
 *
 * # Safety
 * `h` must be a live handle, `buf` must have `cap` writable bytes (or be null with `cap == 0`),
 * and `len` must be valid.
 */
enum ScStatus sc_daisy_decode(const struct ScGraph *h, uint8_t *buf, size_t cap, size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRUCTCODE_H */
