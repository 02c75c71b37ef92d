#include <cmath>

#include "abi.hpp"

namespace orthoentropy::kernels::detail {

void sturm_count_scalar(const double* diag, const double* offdiag_sq, size_t n, double pivmin,
                        const double* shifts, size_t m, int* counts) {
  for (size_t k = 0; k < m; ++k) {
    const double x = shifts[k];
    int count = 0;
    double q = diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    count += q < 0.0;
    for (size_t i = 1; i < n; ++i) {
      const double t = diag[i] - x;
      const double u = offdiag_sq[i - 1] / q;
      q = t - u;
      if (std::abs(q) < pivmin) q = -pivmin;
      count += q < 0.0;
    }
    counts[k] = count;
  }
}

void recurrence_scalar(const double* diag, const double* offdiag, size_t n, const double* lambdas,
                       size_t m, double* values, int* rescales) {
  for (size_t k = 0; k < m; ++k) {
    const double lambda = lambdas[k];
    double* column = values + k * n;
    int scaled = 0;
    double previous = 0.0;
    double current = 1.0;
    column[0] = 1.0;
    for (size_t i = 0; i + 1 < n; ++i) {
      const double b_previous = i == 0 ? 0.0 : offdiag[i - 1];
      const double t = (lambda - diag[i]) * current;
      const double u = b_previous * previous;
      double next = (t - u) / offdiag[i];
      if (std::abs(next) > kRescaleThreshold) {
        next *= kRescaleFactor;
        current *= kRescaleFactor;
        for (size_t r = 0; r <= i; ++r) column[r] *= kRescaleFactor;
        ++scaled;
      }
      column[i + 1] = next;
      previous = current;
      current = next;
    }
    rescales[k] = scaled;
  }
}

}  // namespace orthoentropy::kernels::detail

namespace orthoentropy::kernels::detail {

void twisted_vector_scalar(const double* diag, const double* offdiag, const double* offdiag_sq, size_t n,
                           double pivmin, const double* lambdas, size_t m, double* values, int* twists,
                           double* work) {
  double* dplus = work;
  double* dminus = work + n;
  for (size_t k = 0; k < m; ++k) {
    const double lambda = lambdas[k];
    double* z = values + k * n;

    dplus[0] = diag[0] - lambda;
    if (std::abs(dplus[0]) < pivmin) dplus[0] = -pivmin;
    for (size_t i = 1; i < n; ++i) {
      const double t = diag[i] - lambda;
      const double u = offdiag_sq[i - 1] / dplus[i - 1];
      dplus[i] = t - u;
      if (std::abs(dplus[i]) < pivmin) dplus[i] = -pivmin;
    }
    dminus[n - 1] = diag[n - 1] - lambda;
    if (std::abs(dminus[n - 1]) < pivmin) dminus[n - 1] = -pivmin;
    for (size_t i = n - 1; i-- > 0;) {
      const double t = diag[i] - lambda;
      const double u = offdiag_sq[i] / dminus[i + 1];
      dminus[i] = t - u;
      if (std::abs(dminus[i]) < pivmin) dminus[i] = -pivmin;
    }

    size_t twist = 0;
    double best = HUGE_VAL;
    for (size_t i = 0; i < n; ++i) {
      const double gamma = std::abs((dplus[i] + dminus[i]) - (diag[i] - lambda));
      if (gamma < best) {
        best = gamma;
        twist = i;
      }
    }

    z[twist] = 1.0;
    double current = 1.0;
    for (size_t i = twist; i-- > 0;) {
      current = -(offdiag[i] / dplus[i]) * current;
      z[i] = current;
    }
    current = 1.0;
    for (size_t i = twist + 1; i < n; ++i) {
      current = -(offdiag[i - 1] / dminus[i]) * current;
      z[i] = current;
    }
    twists[k] = static_cast<int>(twist);
  }
}

}  // namespace orthoentropy::kernels::detail
