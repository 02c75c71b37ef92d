// AArch64 Advanced SIMD variant, two double lanes. Built with
// -ffp-contract=off so multiply/subtract pairs are never fused.

#include <arm_neon.h>

#include "abi.hpp"

namespace orthoentropy::kernels::detail {

namespace {

constexpr size_t kLanes = 2;

}  // namespace

void sturm_count_neon(const double* diag, const double* offdiag_sq, size_t n, double pivmin,
                      const double* shifts, size_t m, int* counts) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t pivmin_v = vdupq_n_f64(pivmin);
  const float64x2_t neg_pivmin = vdupq_n_f64(-pivmin);
  size_t k = 0;
  for (; k + kLanes <= m; k += kLanes) {
    const float64x2_t x = vld1q_f64(shifts + k);
    int64x2_t count = vdupq_n_s64(0);
    float64x2_t q = vsubq_f64(vdupq_n_f64(diag[0]), x);
    q = vbslq_f64(vcltq_f64(vabsq_f64(q), pivmin_v), neg_pivmin, q);
    count = vsubq_s64(count, vreinterpretq_s64_u64(vcltq_f64(q, zero)));
    for (size_t i = 1; i < n; ++i) {
      const float64x2_t t = vsubq_f64(vdupq_n_f64(diag[i]), x);
      const float64x2_t u = vdivq_f64(vdupq_n_f64(offdiag_sq[i - 1]), q);
      q = vsubq_f64(t, u);
      q = vbslq_f64(vcltq_f64(vabsq_f64(q), pivmin_v), neg_pivmin, q);
      count = vsubq_s64(count, vreinterpretq_s64_u64(vcltq_f64(q, zero)));
    }
    counts[k] = static_cast<int>(vgetq_lane_s64(count, 0));
    counts[k + 1] = static_cast<int>(vgetq_lane_s64(count, 1));
  }
  if (k < m) sturm_count_scalar(diag, offdiag_sq, n, pivmin, shifts + k, m - k, counts + k);
}

void recurrence_neon(const double* diag, const double* offdiag, size_t n, const double* lambdas,
                     size_t m, double* values, int* rescales) {
  const float64x2_t threshold = vdupq_n_f64(kRescaleThreshold);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t factor = vdupq_n_f64(kRescaleFactor);
  size_t k = 0;
  for (; k + kLanes <= m; k += kLanes) {
    const float64x2_t lambda = vld1q_f64(lambdas + k);
    double* columns[kLanes] = {values + k * n, values + (k + 1) * n};
    int scaled[kLanes] = {0, 0};
    columns[0][0] = 1.0;
    columns[1][0] = 1.0;
    float64x2_t previous = vdupq_n_f64(0.0);
    float64x2_t current = one;
    for (size_t i = 0; i + 1 < n; ++i) {
      const float64x2_t b_previous = vdupq_n_f64(i == 0 ? 0.0 : offdiag[i - 1]);
      const float64x2_t t = vmulq_f64(vsubq_f64(lambda, vdupq_n_f64(diag[i])), current);
      const float64x2_t u = vmulq_f64(b_previous, previous);
      float64x2_t next = vdivq_f64(vsubq_f64(t, u), vdupq_n_f64(offdiag[i]));
      const uint64x2_t overflow = vcgtq_f64(vabsq_f64(next), threshold);
      const bool lane0 = vgetq_lane_u64(overflow, 0) != 0;
      const bool lane1 = vgetq_lane_u64(overflow, 1) != 0;
      if (lane0 || lane1) {
        const float64x2_t scale = vbslq_f64(overflow, factor, one);
        next = vmulq_f64(next, scale);
        current = vmulq_f64(current, scale);
        const bool hit[kLanes] = {lane0, lane1};
        for (size_t l = 0; l < kLanes; ++l) {
          if (hit[l]) {
            for (size_t r = 0; r <= i; ++r) columns[l][r] *= kRescaleFactor;
            ++scaled[l];
          }
        }
      }
      columns[0][i + 1] = vgetq_lane_f64(next, 0);
      columns[1][i + 1] = vgetq_lane_f64(next, 1);
      previous = current;
      current = next;
    }
    rescales[k] = scaled[0];
    rescales[k + 1] = scaled[1];
  }
  if (k < m) recurrence_scalar(diag, offdiag, n, lambdas + k, m - k, values + k * n, rescales + k);
}

}  // namespace orthoentropy::kernels::detail

namespace orthoentropy::kernels::detail {

void twisted_vector_neon(const double* diag, const double* offdiag, const double* offdiag_sq, size_t n,
                         double pivmin, const double* lambdas, size_t m, double* values, int* twists,
                         double* work) {
  const float64x2_t pivmin_v = vdupq_n_f64(pivmin);
  const float64x2_t neg_pivmin = vdupq_n_f64(-pivmin);
  double* dplus = work;
  double* dminus = work + kLanes * n;
  size_t k = 0;
  for (; k + kLanes <= m; k += kLanes) {
    const float64x2_t lambda = vld1q_f64(lambdas + k);

    float64x2_t q = vsubq_f64(vdupq_n_f64(diag[0]), lambda);
    q = vbslq_f64(vcltq_f64(vabsq_f64(q), pivmin_v), neg_pivmin, q);
    vst1q_f64(dplus, q);
    for (size_t i = 1; i < n; ++i) {
      const float64x2_t t = vsubq_f64(vdupq_n_f64(diag[i]), lambda);
      const float64x2_t u = vdivq_f64(vdupq_n_f64(offdiag_sq[i - 1]), q);
      q = vsubq_f64(t, u);
      q = vbslq_f64(vcltq_f64(vabsq_f64(q), pivmin_v), neg_pivmin, q);
      vst1q_f64(dplus + i * kLanes, q);
    }
    q = vsubq_f64(vdupq_n_f64(diag[n - 1]), lambda);
    q = vbslq_f64(vcltq_f64(vabsq_f64(q), pivmin_v), neg_pivmin, q);
    vst1q_f64(dminus + (n - 1) * kLanes, q);
    for (size_t i = n - 1; i-- > 0;) {
      const float64x2_t t = vsubq_f64(vdupq_n_f64(diag[i]), lambda);
      const float64x2_t u = vdivq_f64(vdupq_n_f64(offdiag_sq[i]), q);
      q = vsubq_f64(t, u);
      q = vbslq_f64(vcltq_f64(vabsq_f64(q), pivmin_v), neg_pivmin, q);
      vst1q_f64(dminus + i * kLanes, q);
    }

    float64x2_t best = vdupq_n_f64(__builtin_huge_val());
    float64x2_t best_index = vdupq_n_f64(0.0);
    for (size_t i = 0; i < n; ++i) {
      const float64x2_t shifted = vsubq_f64(vdupq_n_f64(diag[i]), lambda);
      const float64x2_t sum = vaddq_f64(vld1q_f64(dplus + i * kLanes), vld1q_f64(dminus + i * kLanes));
      const float64x2_t gamma = vabsq_f64(vsubq_f64(sum, shifted));
      const uint64x2_t better = vcltq_f64(gamma, best);
      best = vbslq_f64(better, gamma, best);
      best_index = vbslq_f64(better, vdupq_n_f64(static_cast<double>(i)), best_index);
    }
    const size_t twist[kLanes] = {static_cast<size_t>(vgetq_lane_f64(best_index, 0)),
                                  static_cast<size_t>(vgetq_lane_f64(best_index, 1))};
    double* columns[kLanes] = {values + k * n, values + (k + 1) * n};
    for (size_t l = 0; l < kLanes; ++l) {
      columns[l][twist[l]] = 1.0;
      twists[k + l] = static_cast<int>(twist[l]);
    }

    float64x2_t current = vdupq_n_f64(1.0);
    for (size_t i = n - 1; i-- > 0;) {
      const float64x2_t ratio = vnegq_f64(vdivq_f64(vdupq_n_f64(offdiag[i]), vld1q_f64(dplus + i * kLanes)));
      const float64x2_t next = vmulq_f64(ratio, current);
      const uint64x2_t above = vcltq_f64(vdupq_n_f64(static_cast<double>(i)), best_index);
      current = vbslq_f64(above, next, current);
      if (i < twist[0]) columns[0][i] = vgetq_lane_f64(current, 0);
      if (i < twist[1]) columns[1][i] = vgetq_lane_f64(current, 1);
    }
    current = vdupq_n_f64(1.0);
    for (size_t i = 1; i < n; ++i) {
      const float64x2_t ratio = vnegq_f64(vdivq_f64(vdupq_n_f64(offdiag[i - 1]), vld1q_f64(dminus + i * kLanes)));
      const float64x2_t next = vmulq_f64(ratio, current);
      const uint64x2_t below = vcgtq_f64(vdupq_n_f64(static_cast<double>(i)), best_index);
      current = vbslq_f64(below, next, current);
      if (i > twist[0]) columns[0][i] = vgetq_lane_f64(current, 0);
      if (i > twist[1]) columns[1][i] = vgetq_lane_f64(current, 1);
    }
  }
  if (k < m) {
    twisted_vector_scalar(diag, offdiag, offdiag_sq, n, pivmin, lambdas + k, m - k, values + k * n, twists + k,
                          work);
  }
}

}  // namespace orthoentropy::kernels::detail
