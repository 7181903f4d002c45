#ifndef NCGABOR_H
#define NCGABOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum NcgStatus {
  NCG_STATUS_OK = 0,
  NCG_STATUS_NULL_POINTER = 1,
  NCG_STATUS_INVALID_ARGUMENT = 2,
  NCG_STATUS_DIMENSION_MISMATCH = 3,
  NCG_STATUS_NOT_A_FRAME = 4,
  NCG_STATUS_NOT_INVERTIBLE = 5,
  NCG_STATUS_NON_CONVERGENCE = 6,
  NCG_STATUS_BUFFER_TOO_SMALL = 7,
  NCG_STATUS_PANIC = 8,
  NCG_STATUS_INTERNAL = 9,
} NcgStatus;

/**
 * Opaque handle: a lattice together with its adjoint.
 */
typedef struct NcgModule NcgModule;

/**
 * Frame bounds of a Gabor system. Redundancy is `|Lambda| / N` as a
 * reduced fraction.
 */
typedef struct NcgFrameReport {
  double lower_bound;
  double upper_bound;
  /**
   * `INFINITY` when the system is not a frame.
   */
  double condition_number;
  size_t redundancy_numer;
  size_t redundancy_denom;
  bool is_frame;
} NcgFrameReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *ncg_version(void);

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *ncg_last_error(void);

/**
 * Parses `spec` (`sep:a,b` or `gen:(x,w);...`) on `Z_n x Z_n` and builds the
 * lattice with its adjoint.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum NcgStatus ncg_module_new(size_t n, const char *spec, struct NcgModule **out);

/**
 * # Safety
 * `m` must be NULL or a handle from [`ncg_module_new`] not yet freed.
 */
void ncg_module_free(struct NcgModule *m);

/**
 * `N`, or 0 for a NULL handle.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
size_t ncg_module_size(const struct NcgModule *m);

/**
 * Number of lattice points, or 0 for a NULL handle.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
size_t ncg_module_lattice_len(const struct NcgModule *m);

/**
 * Number of adjoint lattice points, or 0 for a NULL handle.
 *
 * # Safety
 * `m` must be NULL or a live handle.
 */
size_t ncg_module_adjoint_len(const struct NcgModule *m);

/**
 * Writes the lattice points in ascending order into `out`, which holds
 * `capacity` points (`2 * capacity` entries).
 *
 * # Safety
 * `m` must be a live handle and `out` valid for `2 * capacity` writes.
 */
enum NcgStatus ncg_module_lattice_points(const struct NcgModule *m, size_t *out, size_t capacity);

/**
 * Same as [`ncg_module_lattice_points`] for the adjoint lattice.
 *
 * # Safety
 * `m` must be a live handle and `out` valid for `2 * capacity` writes.
 */
enum NcgStatus ncg_module_adjoint_points(const struct NcgModule *m, size_t *out, size_t capacity);

/**
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum NcgStatus ncg_module_is_isotropic(const struct NcgModule *m, bool *out);

/**
 * Frame bounds of the Gabor system of `g` over the module's lattice. A
 * window that is not a frame is reported through `is_frame`, not as an
 * error.
 *
 * # Safety
 * `g` must hold `2 * n` doubles and `out` be a valid pointer.
 */
enum NcgStatus ncg_frame_bounds(const struct NcgModule *m,
                                const double *g,
                                size_t n,
                                struct NcgFrameReport *out);

/**
 * Canonical dual window of `g`, written to `out` (`2 * n` doubles).
 *
 * # Safety
 * `g` must hold and `out` have room for `2 * n` doubles.
 */
enum NcgStatus ncg_canonical_dual(const struct NcgModule *m,
                                  const double *g,
                                  size_t n,
                                  double *out);

/**
 * Canonical tight window of `g`, written to `out` (`2 * n` doubles).
 *
 * # Safety
 * `g` must hold and `out` have room for `2 * n` doubles.
 */
enum NcgStatus ncg_tight_window(const struct NcgModule *m, const double *g, size_t n, double *out);

/**
 * Wexler-Raz test of the pair `(g, gamma)`. The call succeeds whether or not
 * the pair passes; the verdict goes to `passes`.
 *
 * # Safety
 * `g` and `gamma` must hold `2 * n` doubles; the out pointers must be valid.
 */
enum NcgStatus ncg_wexler_raz(const struct NcgModule *m,
                              const double *g,
                              const double *gamma,
                              size_t n,
                              double *max_residual,
                              bool *passes);

/**
 * Full STFT of `f` with window `g`. `out` receives `n * n` complex values,
 * row `x`, column `w` (`2 * n * n` doubles).
 *
 * # Safety
 * `f` and `g` must hold `2 * n` doubles; `out` must have room for
 * `2 * n * n`.
 */
enum NcgStatus ncg_stft(const double *f, const double *g, size_t n, double *out);

/**
 * Unit-norm periodized Gaussian of length `n`.
 *
 * # Safety
 * `out` must have room for `2 * n` doubles.
 */
enum NcgStatus ncg_periodized_gaussian(size_t n, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCGABOR_H */
