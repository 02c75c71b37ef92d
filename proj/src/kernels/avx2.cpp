// Compiled with -mavx2 and no FMA so every lane performs exactly the scalar
// reference's sequence of IEEE operations.

#include <immintrin.h>

#include "abi.hpp"

namespace orthoentropy::kernels::detail {

namespace {

constexpr size_t kLanes = 4;

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

}  // namespace

void sturm_count_avx2(const double* diag, const double* offdiag_sq, size_t n, double pivmin,
                      const double* shifts, size_t m, int* counts) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d pivmin_v = _mm256_set1_pd(pivmin);
  const __m256d neg_pivmin = _mm256_set1_pd(-pivmin);
  size_t k = 0;
  for (; k + kLanes <= m; k += kLanes) {
    const __m256d x = _mm256_loadu_pd(shifts + k);
    __m256i count = _mm256_setzero_si256();
    __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), x);
    q = _mm256_blendv_pd(q, neg_pivmin, _mm256_cmp_pd(abs_pd(q), pivmin_v, _CMP_LT_OQ));
    // A true comparison lane is all ones, i.e. -1 as a 64-bit integer.
    count = _mm256_sub_epi64(count, _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)));
    for (size_t i = 1; i < n; ++i) {
      const __m256d t = _mm256_sub_pd(_mm256_set1_pd(diag[i]), x);
      const __m256d u = _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i - 1]), q);
      q = _mm256_sub_pd(t, u);
      q = _mm256_blendv_pd(q, neg_pivmin, _mm256_cmp_pd(abs_pd(q), pivmin_v, _CMP_LT_OQ));
      count = _mm256_sub_epi64(count, _mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)));
    }
    alignas(32) long long lanes[kLanes];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), count);
    for (size_t l = 0; l < kLanes; ++l) counts[k + l] = static_cast<int>(lanes[l]);
  }
  if (k < m) sturm_count_scalar(diag, offdiag_sq, n, pivmin, shifts + k, m - k, counts + k);
}

void recurrence_avx2(const double* diag, const double* offdiag, size_t n, const double* lambdas,
                     size_t m, double* values, int* rescales) {
  const __m256d threshold = _mm256_set1_pd(kRescaleThreshold);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d factor = _mm256_set1_pd(kRescaleFactor);
  size_t k = 0;
  for (; k + kLanes <= m; k += kLanes) {
    const __m256d lambda = _mm256_loadu_pd(lambdas + k);
    double* columns[kLanes];
    int scaled[kLanes] = {0, 0, 0, 0};
    for (size_t l = 0; l < kLanes; ++l) {
      columns[l] = values + (k + l) * n;
      columns[l][0] = 1.0;
    }
    __m256d previous = _mm256_setzero_pd();
    __m256d current = one;
    alignas(32) double lanes[kLanes];
    for (size_t i = 0; i + 1 < n; ++i) {
      const __m256d b_previous = _mm256_set1_pd(i == 0 ? 0.0 : offdiag[i - 1]);
      const __m256d t = _mm256_mul_pd(_mm256_sub_pd(lambda, _mm256_set1_pd(diag[i])), current);
      const __m256d u = _mm256_mul_pd(b_previous, previous);
      __m256d next = _mm256_div_pd(_mm256_sub_pd(t, u), _mm256_set1_pd(offdiag[i]));
      const __m256d overflow = _mm256_cmp_pd(abs_pd(next), threshold, _CMP_GT_OQ);
      const int bits = _mm256_movemask_pd(overflow);
      if (bits != 0) {
        const __m256d scale = _mm256_blendv_pd(one, factor, overflow);
        next = _mm256_mul_pd(next, scale);
        current = _mm256_mul_pd(current, scale);
        for (size_t l = 0; l < kLanes; ++l) {
          if ((bits >> l) & 1) {
            for (size_t r = 0; r <= i; ++r) columns[l][r] *= kRescaleFactor;
            ++scaled[l];
          }
        }
      }
      _mm256_store_pd(lanes, next);
      for (size_t l = 0; l < kLanes; ++l) columns[l][i + 1] = lanes[l];
      previous = current;
      current = next;
    }
    for (size_t l = 0; l < kLanes; ++l) rescales[k + l] = scaled[l];
  }
  if (k < m) recurrence_scalar(diag, offdiag, n, lambdas + k, m - k, values + k * n, rescales + k);
}

}  // namespace orthoentropy::kernels::detail

namespace orthoentropy::kernels::detail {

void twisted_vector_avx2(const double* diag, const double* offdiag, const double* offdiag_sq, size_t n,
                         double pivmin, const double* lambdas, size_t m, double* values, int* twists,
                         double* work) {
  const __m256d pivmin_v = _mm256_set1_pd(pivmin);
  const __m256d neg_pivmin = _mm256_set1_pd(-pivmin);
  const __m256d sign = _mm256_set1_pd(-0.0);
  // Pivots interleaved by lane: entry i of lane l at [i * kLanes + l].
  double* dplus = work;
  double* dminus = work + kLanes * n;
  size_t k = 0;
  for (; k + kLanes <= m; k += kLanes) {
    const __m256d lambda = _mm256_loadu_pd(lambdas + k);

    __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), lambda);
    q = _mm256_blendv_pd(q, neg_pivmin, _mm256_cmp_pd(abs_pd(q), pivmin_v, _CMP_LT_OQ));
    _mm256_storeu_pd(dplus, q);
    for (size_t i = 1; i < n; ++i) {
      const __m256d t = _mm256_sub_pd(_mm256_set1_pd(diag[i]), lambda);
      const __m256d u = _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i - 1]), q);
      q = _mm256_sub_pd(t, u);
      q = _mm256_blendv_pd(q, neg_pivmin, _mm256_cmp_pd(abs_pd(q), pivmin_v, _CMP_LT_OQ));
      _mm256_storeu_pd(dplus + i * kLanes, q);
    }
    q = _mm256_sub_pd(_mm256_set1_pd(diag[n - 1]), lambda);
    q = _mm256_blendv_pd(q, neg_pivmin, _mm256_cmp_pd(abs_pd(q), pivmin_v, _CMP_LT_OQ));
    _mm256_storeu_pd(dminus + (n - 1) * kLanes, q);
    for (size_t i = n - 1; i-- > 0;) {
      const __m256d t = _mm256_sub_pd(_mm256_set1_pd(diag[i]), lambda);
      const __m256d u = _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i]), q);
      q = _mm256_sub_pd(t, u);
      q = _mm256_blendv_pd(q, neg_pivmin, _mm256_cmp_pd(abs_pd(q), pivmin_v, _CMP_LT_OQ));
      _mm256_storeu_pd(dminus + i * kLanes, q);
    }

    __m256d best = _mm256_set1_pd(__builtin_huge_val());
    __m256d best_index = _mm256_setzero_pd();
    for (size_t i = 0; i < n; ++i) {
      const __m256d shifted = _mm256_sub_pd(_mm256_set1_pd(diag[i]), lambda);
      const __m256d sum = _mm256_add_pd(_mm256_loadu_pd(dplus + i * kLanes), _mm256_loadu_pd(dminus + i * kLanes));
      const __m256d gamma = abs_pd(_mm256_sub_pd(sum, shifted));
      const __m256d better = _mm256_cmp_pd(gamma, best, _CMP_LT_OQ);
      best = _mm256_blendv_pd(best, gamma, better);
      best_index = _mm256_blendv_pd(best_index, _mm256_set1_pd(static_cast<double>(i)), better);
    }
    alignas(32) double index_lanes[kLanes];
    _mm256_store_pd(index_lanes, best_index);
    size_t twist[kLanes];
    double* columns[kLanes];
    for (size_t l = 0; l < kLanes; ++l) {
      twist[l] = static_cast<size_t>(index_lanes[l]);
      columns[l] = values + (k + l) * n;
      columns[l][twist[l]] = 1.0;
      twists[k + l] = static_cast<int>(twist[l]);
    }
    const __m256d twist_v = best_index;

    alignas(32) double lanes[kLanes];
    __m256d current = _mm256_set1_pd(1.0);
    for (size_t i = n - 1; i-- > 0;) {
      const __m256d ratio = _mm256_xor_pd(_mm256_div_pd(_mm256_set1_pd(offdiag[i]), _mm256_loadu_pd(dplus + i * kLanes)), sign);
      const __m256d next = _mm256_mul_pd(ratio, current);
      const __m256d above = _mm256_cmp_pd(_mm256_set1_pd(static_cast<double>(i)), twist_v, _CMP_LT_OQ);
      current = _mm256_blendv_pd(current, next, above);
      _mm256_store_pd(lanes, current);
      for (size_t l = 0; l < kLanes; ++l) {
        if (i < twist[l]) columns[l][i] = lanes[l];
      }
    }
    current = _mm256_set1_pd(1.0);
    for (size_t i = 1; i < n; ++i) {
      const __m256d ratio = _mm256_xor_pd(_mm256_div_pd(_mm256_set1_pd(offdiag[i - 1]), _mm256_loadu_pd(dminus + i * kLanes)), sign);
      const __m256d next = _mm256_mul_pd(ratio, current);
      const __m256d below = _mm256_cmp_pd(_mm256_set1_pd(static_cast<double>(i)), twist_v, _CMP_GT_OQ);
      current = _mm256_blendv_pd(current, next, below);
      _mm256_store_pd(lanes, current);
      for (size_t l = 0; l < kLanes; ++l) {
        if (i > twist[l]) columns[l][i] = lanes[l];
      }
    }
  }
  if (k < m) {
    twisted_vector_scalar(diag, offdiag, offdiag_sq, n, pivmin, lambdas + k, m - k, values + k * n, twists + k,
                          work);
  }
}

}  // namespace orthoentropy::kernels::detail
