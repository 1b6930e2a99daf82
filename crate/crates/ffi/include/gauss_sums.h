#ifndef GAUSS_SUMS_H
#define GAUSS_SUMS_H

/* Generated by cbindgen from the gauss-sums-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Success.
#define GS_OK 0

// A required pointer argument was null.
#define GS_ERR_NULL_POINTER -1

// Arguments outside the supported domain (bad modulus, bad index, ...).
#define GS_ERR_INVALID_ARGUMENT -2

// The requested size exceeds a library bound.
#define GS_ERR_TOO_LARGE -3

// A mathematically undefined request (trivial character, zero element, ...).
#define GS_ERR_DOMAIN -4

// Oracle noise prevented a reliable reconstruction.
#define GS_ERR_NOISY_ORACLE -5

// Unexpected internal failure.
#define GS_ERR_INTERNAL -6

// How a Gauss-sum value was produced.
typedef enum GsMethod {
  GS_METHOD_DIRECT = 0,
  GS_METHOD_QUADRATIC_CLOSED = 1,
  GS_METHOD_TRIVIAL_CLOSED = 2,
  GS_METHOD_PERIODIC_REDUCTION = 3,
  GS_METHOD_PRIMITIVE_FACTORED = 4,
  GS_METHOD_CRT_PRODUCT = 5,
  GS_METHOD_QUANTUM_ESTIMATED = 6,
} GsMethod;

// Opaque handle to a finite field F_{p^r}.
typedef struct GsField GsField;

// A computed Gauss sum in cartesian and polar form.
typedef struct GsGaussSum {
  double value_re;
  double value_im;
  double norm;
  // Phase in [0, 2π); 0 for zero sums.
  double gamma_rad;
  // Phase as a fraction of a turn, in [0, 1).
  double gamma_turns;
  // Bound on the phase error in radians; 0 for exact methods.
  double error_bound;
  // 1 when the sum is exactly zero.
  int32_t is_zero;
  enum GsMethod method;
} GsGaussSum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds F_{p^r} with the deterministic modulus-polynomial and generator
// choices, storing a heap handle in `out`.
//
// # Safety
// `out` must be a valid pointer; on GS_OK it receives a handle that must be
// released with `gs_field_free`.
int32_t gs_field_new(uint64_t p, uint32_t r, struct GsField **out);

// Like `gs_field_new`, but uses the element with canonical index `g` as the
// generator (validated to have full multiplicative order).
//
// # Safety
// Same contract as `gs_field_new`.
int32_t gs_field_new_with_generator(uint64_t p, uint32_t r, uint64_t g, struct GsField **out);

// Releases a field handle. Null is ignored.
//
// # Safety
// `field` must be a handle from `gs_field_new`/`gs_field_new_with_generator`
// that has not already been freed.
void gs_field_free(struct GsField *field);

// Number of field elements p^r, or 0 for a null handle.
//
// # Safety
// `field` must be null or a live handle.
uint64_t gs_field_order(const struct GsField *field);

// Canonical index of the field generator, or 0 for a null handle.
//
// # Safety
// `field` must be null or a live handle.
uint64_t gs_field_generator(const struct GsField *field);

// G(F_{p^r}, χ_α, β) with automatic method dispatch. `beta` is a canonical
// element index.
//
// # Safety
// `field` must be a live handle and `out` a valid pointer.
int32_t gs_field_gauss_sum(const struct GsField *field,
                           uint64_t alpha,
                           uint64_t beta,
                           struct GsGaussSum *out);

// G(Z/nZ, χ, β) through the exact reduction pipeline. The character is given
// by its two-power indices (α₀, α₀′) and one index per odd prime-power
// factor of n, ascending (`odd_alphas`, `odd_len` entries; may be null when
// `odd_len` is 0).
//
// # Safety
// `out` must be valid; `odd_alphas` must point to `odd_len` readable u64s
// when `odd_len` > 0.
int32_t gs_ring_gauss_sum(uint64_t n,
                          uint64_t alpha0,
                          uint64_t alpha0_prime,
                          const uint64_t *odd_alphas,
                          size_t odd_len,
                          uint64_t beta,
                          struct GsGaussSum *out);

// Jacobi sum J(χ_α, χ_ψ) = Σ χ(x)ψ(1−x) by direct summation.
//
// # Safety
// `field` must be a live handle; `out_re` and `out_im` must be valid.
int32_t gs_jacobi(const struct GsField *field,
                  uint64_t alpha,
                  uint64_t psi_alpha,
                  double *out_re,
                  double *out_im);

// Eigenphase γ of |χ_α⟩ under the simulated transform χ²∘F_β, in [0, 2π).
//
// # Safety
// `field` must be a live handle and `out_gamma` a valid pointer.
int32_t gs_eigenphase(const struct GsField *field,
                      uint64_t alpha,
                      uint64_t beta,
                      double *out_gamma);

// Sampling-based estimate of the Gauss-sum phase from t one-bit measurements
// (`adaptive` 0 = fixed two-basis split, nonzero = staged recentering). The
// estimate lands in `out_gamma`; `out_samples` (optional) receives the
// samples actually consumed.
//
// # Safety
// `field` must be a live handle and `out_gamma` valid; `out_samples` may be
// null.
int32_t gs_phase_estimate(const struct GsField *field,
                          uint64_t alpha,
                          uint64_t beta,
                          uint64_t t,
                          int32_t adaptive,
                          uint64_t seed,
                          double *out_gamma,
                          uint64_t *out_samples);

// Recovers log_g(x) from exact Gauss-sum phase queries; the result is
// verified by exponentiation before it is returned. `out_calls` (optional)
// receives the number of oracle queries spent.
//
// # Safety
// `field` must be a live handle and `out_ell` valid; `out_calls` may be null.
int32_t gs_dlog_exact(const struct GsField *field,
                      uint64_t alpha,
                      uint64_t x,
                      uint64_t *out_ell,
                      uint64_t *out_calls);

// Like `gs_dlog_exact` but queries an oracle whose phases carry seeded
// uniform noise bounded by `epsilon` radians (must be ≤ 2π/16).
//
// # Safety
// Same contract as `gs_dlog_exact`.
int32_t gs_dlog_noisy(const struct GsField *field,
                      uint64_t alpha,
                      uint64_t x,
                      double epsilon,
                      uint64_t seed,
                      uint64_t *out_ell,
                      uint64_t *out_calls);

// Partial sums of χ_α(x)e(x) over a prime field as CSV text ("t,re,im"
// header plus one row per step; `generator_ordering` 0 walks x = 1,2,...,
// nonzero walks x = g, g², ...). The string is owned by the caller and must
// be released with `gs_string_free`.
//
// # Safety
// `field` must be a live handle and `out_csv` a valid pointer.
int32_t gs_walk_csv(const struct GsField *field,
                    uint64_t alpha,
                    int32_t generator_ordering,
                    char **out_csv);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be a string returned by this library that has not been freed.
void gs_string_free(char *s);

// Message for the most recent failure on this thread, or null if none.
// Valid until the next failing call on the same thread.
const char *gs_last_error(void);

// Runs the library's invariant self-checks; returns the number of failing
// checks (0 means everything passed).
int32_t gs_selftest(void);

// Library version as a static string.
const char *gs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAUSS_SUMS_H */
