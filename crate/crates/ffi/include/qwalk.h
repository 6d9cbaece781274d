#ifndef QWALK_H
#define QWALK_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define QW_WALK_HALF_LINE 0

#define QW_WALK_LINE 1

#define QW_PRECISION_DOUBLE 0

#define QW_PRECISION_DOUBLE_DOUBLE 1

#define QW_PRECISION_EXACT 2

#define QW_VIEW_INNER0 0

#define QW_VIEW_INNER1 1

#define QW_VIEW_TOTAL 2

#define QW_VIEW_SPLIT 3

#define QW_DENSITY_LINE_TOTAL 0

#define QW_DENSITY_HALF_INNER0 1

#define QW_DENSITY_HALF_INNER1 2

#define QW_DENSITY_HALF_TOTAL 3

#define QW_APPROX_INNER0 0

#define QW_APPROX_INNER1 1

#define QW_APPROX_TOTAL 2

typedef enum QwStatus {
  QW_STATUS_OK = 0,
  QW_STATUS_INVALID_ARGUMENT = 1,
  QW_STATUS_DOMAIN = 2,
  QW_STATUS_RESOURCE = 3,
  QW_STATUS_PRECISION = 4,
  QW_STATUS_PARSE = 5,
  QW_STATUS_IO = 6,
  QW_STATUS_NULL_POINTER = 7,
  QW_STATUS_PANIC = 8,
} QwStatus;

// Coin handle.
typedef struct QwCoin QwCoin;

// Distribution handle.
typedef struct QwDistribution QwDistribution;

// Limit density handle.
typedef struct QwLimitDensity QwLimitDensity;

// One distribution row. Columns a route does not provide are NaN.
typedef struct QwRow {
  int64_t x;
  double p0;
  double p1;
  double p;
} QwRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread. The pointer stays
// valid until the next failing call on the same thread.
const char *qw_last_error_message(void);

// Coin for an angle in radians.
//
// # Safety
// `out` must be a valid pointer to writable storage.
enum QwStatus qw_coin_new(double theta, struct QwCoin **out);

// Coin for the angle `num/den · π`, kept exact.
//
// # Safety
// `out` must be a valid pointer to writable storage.
enum QwStatus qw_coin_from_pi_fraction(int64_t num, int64_t den, struct QwCoin **out);

// Writes cos θ and sin θ.
//
// # Safety
// `coin` must be a live handle; `c` and `s` must be writable.
enum QwStatus qw_coin_cos_sin(const struct QwCoin *coin, double *c, double *s);

// # Safety
// `coin` must be null or a handle not yet freed.
void qw_coin_free(struct QwCoin *coin);

// Distribution after `t` steps of unitary evolution.
//
// # Safety
// `coin` must be a live handle; `out` must be writable.
enum QwStatus qw_evolve(const struct QwCoin *coin,
                        uint32_t walk,
                        uint64_t t,
                        struct QwDistribution **out);

// Closed-form distribution. `view` selects the half-line columns and is
// ignored for the line walk, which is total-only.
//
// # Safety
// `coin` must be a live handle; `out` must be writable.
enum QwStatus qw_exact(const struct QwCoin *coin,
                       uint32_t walk,
                       uint64_t t,
                       uint32_t view,
                       uint32_t precision_level,
                       struct QwDistribution **out);

// Exact θ = π/4 distribution, rounded once to double.
//
// # Safety
// `out` must be writable.
enum QwStatus qw_oracle(uint32_t walk, uint64_t t, struct QwDistribution **out);

// Number of rows.
//
// # Safety
// `dist` must be a live handle; `out` must be writable.
enum QwStatus qw_distribution_len(const struct QwDistribution *dist, size_t *out);

// Time step of the distribution.
//
// # Safety
// `dist` must be a live handle; `out` must be writable.
enum QwStatus qw_distribution_time(const struct QwDistribution *dist, uint64_t *out);

// Row `index`, in increasing position order.
//
// # Safety
// `dist` must be a live handle; `out` must be writable.
enum QwStatus qw_distribution_row(const struct QwDistribution *dist,
                                  size_t index,
                                  struct QwRow *out);

// Sum of the `p` column.
//
// # Safety
// `dist` must be a live handle; `out` must be writable.
enum QwStatus qw_distribution_total(const struct QwDistribution *dist, double *out);

// # Safety
// `dist` must be null or a handle not yet freed.
void qw_distribution_free(struct QwDistribution *dist);

// Limit density of the scaled position.
//
// # Safety
// `coin` must be a live handle; `out` must be writable.
enum QwStatus qw_limit_density_new(const struct QwCoin *coin,
                                   uint32_t kind,
                                   struct QwLimitDensity **out);

// Density value at `y`; zero off the support.
//
// # Safety
// `density` must be a live handle; `out` must be writable.
enum QwStatus qw_limit_density_at(const struct QwLimitDensity *density, double y, double *out);

// Cumulative distribution at `y`.
//
// # Safety
// `density` must be a live handle; `out` must be writable.
enum QwStatus qw_limit_cdf_at(const struct QwLimitDensity *density, double y, double *out);

// # Safety
// `density` must be null or a handle not yet freed.
void qw_limit_density_free(struct QwLimitDensity *density);

// Density-based approximation of P(X_t = x) on the half line.
//
// # Safety
// `coin` must be a live handle; `out` must be writable.
enum QwStatus qw_approx_prob(const struct QwCoin *coin,
                             uint64_t t,
                             int64_t x,
                             uint32_t kind,
                             double *out);

// Kolmogorov–Smirnov distance between X_t/t and the limit law.
//
// # Safety
// `coin` must be a live handle; `out` must be writable.
enum QwStatus qw_ks_distance(const struct QwCoin *coin, uint64_t t, uint32_t kind, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QWALK_H */
