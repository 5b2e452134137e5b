#ifndef QUIVER_MODULI_H
#define QUIVER_MODULI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this interface.
 */
typedef enum QmStatus {
  /**
   * The call succeeded and any out-parameters are filled in.
   */
  QmStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  QmStatus_NullPointer = 1,
  /**
   * The inputs were rejected; see `qm_last_error_message`.
   */
  QmStatus_InvalidInput = 2,
  /**
   * The lattice box exceeded the configured enumeration budget.
   */
  QmStatus_BudgetExceeded = 3,
  /**
   * The dimension vector is not stable, so the quantity is undefined.
   */
  QmStatus_NotStable = 4,
} QmStatus;

/**
 * An opaque quiver handle.
 */
typedef struct QmQuiver QmQuiver;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message attached to the most recent failure on this thread, or
 * null if the last call succeeded. Valid until the next failing call on
 * the same thread.
 */
const char *qm_last_error_message(void);

/**
 * A quiver with `vertices` vertices and no arrows yet.
 */
struct QmQuiver *qm_quiver_new(uintptr_t vertices);

/**
 * Adds `count` parallel arrows from `source` to `target`.
 */
enum QmStatus qm_quiver_add_arrow(struct QmQuiver *quiver,
                                  uintptr_t source,
                                  uintptr_t target,
                                  uint64_t count);

/**
 * The two-vertex quiver with `n` parallel arrows.
 */
struct QmQuiver *qm_quiver_kronecker(uint32_t n);

/**
 * The oriented cycle on `n` vertices.
 */
struct QmQuiver *qm_quiver_cyclic(uint32_t n);

/**
 * The complete bipartite quiver with `p` sources and `q` sinks.
 */
struct QmQuiver *qm_quiver_bipartite(uint32_t p, uint32_t q);

/**
 * Parses `{"vertices": k, "arrows": [[s, t], ...]}`.
 */
struct QmQuiver *qm_quiver_from_json(const char *text);

/**
 * Renders the quiver in the same JSON shape the parser accepts. Free the
 * result with `qm_string_free`.
 */
char *qm_quiver_to_json(const struct QmQuiver *quiver);

uintptr_t qm_quiver_num_vertices(const struct QmQuiver *quiver);

/**
 * Number of arrows from `source` to `target`, zero on a null handle or
 * out-of-range vertices.
 */
uint64_t qm_quiver_arrow_count(const struct QmQuiver *quiver, uintptr_t source, uintptr_t target);

void qm_quiver_free(struct QmQuiver *quiver);

void qm_string_free(char *text);

/**
 * The Euler pairing of two dimension vectors.
 */
enum QmStatus qm_euler_pairing(const struct QmQuiver *quiver,
                               const uint64_t *left,
                               uintptr_t left_len,
                               const uint64_t *right,
                               uintptr_t right_len,
                               int64_t *out);

/**
 * Does a theta-stable representation of dimension `alpha` exist? A
 * `budget` of zero means the default lattice budget.
 */
enum QmStatus qm_is_theta_stable(const struct QmQuiver *quiver,
                                 const int64_t *theta,
                                 uintptr_t theta_len,
                                 const uint64_t *alpha,
                                 uintptr_t alpha_len,
                                 uint64_t budget,
                                 bool *out);

/**
 * Does a theta-semistable representation of dimension `alpha` exist?
 */
enum QmStatus qm_is_theta_semistable(const struct QmQuiver *quiver,
                                     const int64_t *theta,
                                     uintptr_t theta_len,
                                     const uint64_t *alpha,
                                     uintptr_t alpha_len,
                                     uint64_t budget,
                                     bool *out);

/**
 * Does a simple representation of dimension `alpha` exist?
 */
enum QmStatus qm_is_simple(const struct QmQuiver *quiver,
                           const uint64_t *alpha,
                           uintptr_t alpha_len,
                           bool *out);

/**
 * Dimension of the moduli space at a theta-stable `alpha`; fails with
 * `NotStable` otherwise.
 */
enum QmStatus qm_moduli_dimension(const struct QmQuiver *quiver,
                                  const int64_t *theta,
                                  uintptr_t theta_len,
                                  const uint64_t *alpha,
                                  uintptr_t alpha_len,
                                  int64_t *out);

/**
 * Builds the local quiver of a decomposition. `parts` holds `num_parts`
 * rows of `qm_quiver_num_vertices` entries each, row-major, and
 * `multiplicities` one entry per row; the local quiver's dimension
 * vector is exactly `multiplicities`. The new handle goes back to
 * `qm_quiver_free`.
 */
enum QmStatus qm_local_quiver(const struct QmQuiver *quiver,
                              const uint64_t *multiplicities,
                              const uint64_t *parts,
                              uintptr_t num_parts,
                              struct QmQuiver **out);

/**
 * Do the margins `(a; b)` carry an irreducible representation of the
 * free product of cyclic groups of orders `a_len` and `b_len`?
 */
enum QmStatus qm_torus_knot_stable(const uint64_t *a,
                                   uintptr_t a_len,
                                   const uint64_t *b,
                                   uintptr_t b_len,
                                   bool *out);

/**
 * Finite-field sampling evidence for a simple representation of
 * dimension `alpha`. Zero `modulus`, `trials` or `cap` pick the
 * defaults. True means a certificate was found; false only means no
 * certificate turned up.
 */
enum QmStatus qm_oracle_simple(const struct QmQuiver *quiver,
                               const uint64_t *alpha,
                               uintptr_t alpha_len,
                               uint64_t modulus,
                               uint64_t seed,
                               uint32_t trials,
                               uint64_t cap,
                               bool *out);

/**
 * Finite-field sampling evidence for an irreducible representation with
 * eigenvalue multiplicities `(a; b)`. A zero `modulus` picks the
 * smallest suitable prime above 1000.
 */
enum QmStatus qm_oracle_torus_knot(const uint64_t *a,
                                   uintptr_t a_len,
                                   const uint64_t *b,
                                   uintptr_t b_len,
                                   uint64_t modulus,
                                   uint64_t seed,
                                   uint32_t trials,
                                   uint64_t cap,
                                   bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUIVER_MODULI_H */
