#ifndef COBWEB_H
#define COBWEB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum CobwebStatus {
  COBWEB_STATUS_OK = 0,
  COBWEB_STATUS_NULL_POINTER = 1,
  COBWEB_STATUS_SHAPE = 2,
  COBWEB_STATUS_ARGUMENT = 3,
  COBWEB_STATUS_BOUNDS = 4,
  COBWEB_STATUS_JOIN_CONDITION = 5,
  COBWEB_STATUS_SIZE = 6,
  COBWEB_STATUS_PARSE = 7,
  COBWEB_STATUS_UTF8 = 8,
  COBWEB_STATUS_PANIC = 9,
} CobwebStatus;

/**
 * Opaque cobweb chain handle.
 */
typedef struct CobwebChain CobwebChain;

/**
 * Opaque Boolean matrix handle.
 */
typedef struct CobwebMatrix CobwebMatrix;

/**
 * Rows `r1 < r2` and columns `c1 < c2` of a 2×2 permutation submatrix.
 */
typedef struct CobwebWitness {
  size_t r1;
  size_t r2;
  size_t c1;
  size_t c2;
} CobwebWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into this library on the
 * same thread. Do not free it.
 */
const char *cobweb_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library and not yet freed.
 */
void cobweb_string_free(char *s);

/**
 * Creates a `rows × cols` zero matrix.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CobwebStatus cobweb_matrix_new(size_t rows, size_t cols, struct CobwebMatrix **out);

/**
 * Parses the matrix text format (`R C` header, then `R` lines of `0`/`1`).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_matrix_parse(const char *text, struct CobwebMatrix **out);

/**
 * Releases a matrix. Null is ignored.
 *
 * # Safety
 * `m` must be null or a live handle from this library.
 */
void cobweb_matrix_free(struct CobwebMatrix *m);

/**
 * Row count, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t cobweb_matrix_rows(const struct CobwebMatrix *m);

/**
 * Column count, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t cobweb_matrix_cols(const struct CobwebMatrix *m);

/**
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_matrix_get(const struct CobwebMatrix *m,
                                    size_t row,
                                    size_t col,
                                    bool *out);

/**
 * # Safety
 * `m` must be a live handle.
 */
enum CobwebStatus cobweb_matrix_set(struct CobwebMatrix *m, size_t row, size_t col, bool value);

/**
 * Renders the matrix text format into a new string.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_matrix_to_text(const struct CobwebMatrix *m, char **out);

/**
 * Reflexive-transitive closure (Boolean geometric series) of a square matrix.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_matrix_closure(const struct CobwebMatrix *m, struct CobwebMatrix **out);

/**
 * Ferrers dimension 1 test. When the matrix is not Ferrers and `witness`
 * is non-null, a forbidden 2×2 submatrix is written there.
 *
 * # Safety
 * `m` must be a live handle; `is_ferrers` must be valid for writes;
 * `witness` must be null or valid for writes.
 */
enum CobwebStatus cobweb_matrix_is_ferrers(const struct CobwebMatrix *m,
                                           bool *is_ferrers,
                                           struct CobwebWitness *witness);

/**
 * Ferrers dimension, searched up to `max_d`. Writes 0 when the dimension
 * exceeds `max_d`. Matrices above 12 cells yield `COBWEB_STATUS_SIZE`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_matrix_ferrers_dimension(const struct CobwebMatrix *m,
                                                  size_t max_d,
                                                  size_t *out);

/**
 * Fewest 0→1 flips making the matrix Ferrers. Writes the flip count and,
 * if `completed` is non-null, the completed matrix.
 *
 * # Safety
 * `m` must be a live handle; `count` must be valid for writes; `completed`
 * must be null or valid for writes.
 */
enum CobwebStatus cobweb_matrix_min_completion(const struct CobwebMatrix *m,
                                               size_t *count,
                                               struct CobwebMatrix **completed);

/**
 * Chain with all-ones blocks over the `len` level sizes in `sizes`.
 *
 * # Safety
 * `sizes` must point to `len` readable values; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_complete(const size_t *sizes, size_t len, struct CobwebChain **out);

/**
 * Parses the chain text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_parse(const char *text, struct CobwebChain **out);

/**
 * Releases a chain. Null is ignored.
 *
 * # Safety
 * `c` must be null or a live handle from this library.
 */
void cobweb_chain_free(struct CobwebChain *c);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t cobweb_chain_vertex_count(const struct CobwebChain *c);

/**
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_to_text(const struct CobwebChain *c, char **out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_zeta(const struct CobwebChain *c, struct CobwebMatrix **out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_adjacency(const struct CobwebChain *c, struct CobwebMatrix **out);

/**
 * Block-diagonal biadjacency matrix; single-level chains are rejected.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_biadjacency(const struct CobwebChain *c, struct CobwebMatrix **out);

/**
 * Natural join of `a` followed by `b` into a new chain.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_join(const struct CobwebChain *a,
                                    const struct CobwebChain *b,
                                    struct CobwebChain **out);

/**
 * New chain with arc `(row, col)` of block `block` removed.
 *
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_delete_arc(const struct CobwebChain *c,
                                          size_t block,
                                          size_t row,
                                          size_t col,
                                          struct CobwebChain **out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_is_complete(const struct CobwebChain *c, bool *out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_chain_is_cobweb(const struct CobwebChain *c, bool *out);

/**
 * Complete cobwebs of type `parts` on `n` vertices (a multinomial).
 *
 * # Safety
 * `parts` must point to `len` readable values; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_count_cobweb_type(size_t n, const size_t *parts, size_t len, char **out);

/**
 * Complete cobwebs on `n` vertices with `k` levels, `k!·S(n,k)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CobwebStatus cobweb_count_cobweb_k(size_t n, size_t k, char **out);

/**
 * All complete cobwebs on `n` vertices (the Fubini number).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CobwebStatus cobweb_count_cobweb_total(size_t n, char **out);

/**
 * Non-empty relations between consecutive levels of type `parts`.
 *
 * # Safety
 * `parts` must point to `len` readable values; `out` must be valid for writes.
 */
enum CobwebStatus cobweb_count_relations_type(const size_t *parts, size_t len, char **out);

/**
 * Sum of the relations count over every type of `n`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CobwebStatus cobweb_count_relations_total(size_t n, char **out);

/**
 * Stirling number of the second kind `S(n,k)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CobwebStatus cobweb_count_stirling2(size_t n, size_t k, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COBWEB_H */
