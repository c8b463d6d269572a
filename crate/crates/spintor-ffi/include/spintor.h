#ifndef SPINTOR_H
#define SPINTOR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  /**
   * The call succeeded and all out-parameters are valid.
   */
  SPINTOR_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SPINTOR_STATUS_NULL_ARGUMENT = 1,
  /**
   * An argument was out of range or inconsistent.
   */
  SPINTOR_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The requested dimension is outside the supported range.
   */
  SPINTOR_STATUS_UNSUPPORTED_DIMENSION = 3,
  /**
   * The model admits no isotropy-invariant spinors.
   */
  SPINTOR_STATUS_EMPTY_INVARIANT_SPACE = 4,
  /**
   * A caller-provided buffer is too small; nothing was written.
   */
  SPINTOR_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * An internal invariant failed; the library state is still consistent.
   */
  SPINTOR_STATUS_INTERNAL_PANIC = 6,
} SpintorStatus;

/**
 * An instantiated homogeneous model together with its spin representation.
 */
typedef struct SpintorModel SpintorModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *spintor_version(void);

/**
 * Universal eigenvalue lower bound (1/4)Scal + (1/8)‖T‖² − (1/4)μ².
 */
SpintorStatus spintor_beta_univ(size_t n,
                                double scal_min,
                                double t_norm_sq,
                                double mu,
                                double *out);

/**
 * Twistorial eigenvalue lower bound
 * n/(4(n−1))Scal + n(n−5)/(8(n−3)²)‖T‖² + n(4−n)/(4(n−3)²)μ².
 */
SpintorStatus spintor_beta_tw(size_t n, double scal_min, double t_norm_sq, double mu, double *out);

/**
 * Scalar curvature of the family connection, Scal − 24s²‖T‖².
 */
double spintor_scal_s(double scal_g, double s, double t_norm_sq);

/**
 * Real roots of the Killing-number quadratic, ascending.  Writes up to two
 * values; `out_len` receives 0, 1, or 2 (0 means no real Killing number).
 */
SpintorStatus spintor_kappa_solutions(size_t n,
                                      double scal,
                                      double t_norm_sq,
                                      double mu,
                                      double *out,
                                      size_t capacity,
                                      size_t *out_len);

/**
 * Creates a deformed Stiefel model: `which` is 42 for SO(4)/SO(2) or 52 for
 * SO(5)/SO(3), `t` the positive deformation parameter.  The handle must be
 * released with `spintor_stiefel_free`.
 */
SpintorStatus spintor_stiefel_new(uint32_t which, double t, SpintorModel **out);

/**
 * Releases a model handle.  Passing null is a no-op.
 *
 * # Safety
 * `handle` must be null or a pointer obtained from `spintor_stiefel_new`
 * that has not been freed already.
 */
void spintor_stiefel_free(SpintorModel *handle);

/**
 * Dimension of the underlying homogeneous space.
 *
 * # Safety
 * `handle` must be a live pointer from `spintor_stiefel_new`.
 */
SpintorStatus spintor_stiefel_dim(const SpintorModel *handle, size_t *out);

/**
 * Riemannian scalar curvature of the model.
 *
 * # Safety
 * `handle` must be a live pointer from `spintor_stiefel_new`.
 */
SpintorStatus spintor_stiefel_scal_g(const SpintorModel *handle, double *out);

/**
 * Squared norm of the characteristic torsion form.
 *
 * # Safety
 * `handle` must be a live pointer from `spintor_stiefel_new`.
 */
SpintorStatus spintor_stiefel_torsion_norm_sq(const SpintorModel *handle, double *out);

/**
 * Torsion eigenvalues realized by the isotropy-invariant spinors,
 * descending.
 *
 * # Safety
 * `handle` must be a live pointer from `spintor_stiefel_new`; `out` must
 * point to at least `capacity` writable doubles.
 */
SpintorStatus spintor_stiefel_invariant_mus(const SpintorModel *handle,
                                            double *out,
                                            size_t capacity,
                                            size_t *out_len);

/**
 * Eigenvalues of the characteristic Dirac operator restricted to the
 * invariant spinors, descending.
 *
 * # Safety
 * `handle` must be a live pointer from `spintor_stiefel_new`; `out` must
 * point to at least `capacity` writable doubles.
 */
SpintorStatus spintor_stiefel_dirac_eigenvalues(const SpintorModel *handle,
                                                double *out,
                                                size_t capacity,
                                                size_t *out_len);

/**
 * Largest residual of the Killing equation ∇^s ψ = κ X·ψ for the best
 * invariant candidate spinor at the model's twistorial parameter.
 *
 * # Safety
 * `handle` must be a live pointer from `spintor_stiefel_new`.
 */
SpintorStatus spintor_stiefel_killing_residual(const SpintorModel *handle,
                                               double kappa,
                                               double *out);

/**
 * Runs the Einstein–Sasaki integrability table.  Writes 1 when every
 * candidate Killing number is excluded (all determinants nonzero), else 0.
 */
SpintorStatus spintor_sasaki_check(int32_t *out_excluded);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPINTOR_H */
