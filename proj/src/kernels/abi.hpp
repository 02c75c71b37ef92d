#pragma once

// Raw-pointer entry points of the data-parallel kernels. Each ISA variant lives
// in its own translation unit compiled with its own target flags, so this
// header must stay free of inline templates shared with generic code.
//
// Matrix layout: diag[i] = a_{i+1}, offdiag[i] = b_{i+1}, offdiag_sq[i] = b_{i+1}^2.
//
// sturm_count: for every shift x, counts[k] = number of eigenvalues of the
//   Jacobi matrix strictly below shifts[k] (negative LDL^T pivots of L - x I).
//   Pivots with |q| < pivmin are replaced by -pivmin.
// recurrence: values is column-major n x m; column k holds p_0..p_{n-1} at
//   lambdas[k], divided by 2^(512 * rescales[k]). A column is rescaled by
//   2^-512 whenever a new entry exceeds 2^512 in magnitude.
// twisted_vector: for every shift lambda (an eigenvalue approximation), the
//   null vector z of L - lambda I built from the top-down pivots D+ and the
//   bottom-up pivots D-, twisted at r = argmin |D+(r) + D-(r) - (a_r - lambda)|
//   with z_r = 1. Column-major n x m into values; twists[k] = r (0-based).
//   work must hold 8 * n doubles.

#include <stddef.h>

namespace orthoentropy::kernels::detail {

inline constexpr double kRescaleThreshold = 0x1p512;
inline constexpr double kRescaleFactor = 0x1p-512;

void sturm_count_scalar(const double* diag, const double* offdiag_sq, size_t n, double pivmin,
                        const double* shifts, size_t m, int* counts);
void recurrence_scalar(const double* diag, const double* offdiag, size_t n, const double* lambdas,
                       size_t m, double* values, int* rescales);
void twisted_vector_scalar(const double* diag, const double* offdiag, const double* offdiag_sq, size_t n,
                          double pivmin, const double* lambdas, size_t m, double* values, int* twists,
                          double* work);

#if defined(__x86_64__) || defined(_M_X64)
void sturm_count_avx2(const double* diag, const double* offdiag_sq, size_t n, double pivmin,
                      const double* shifts, size_t m, int* counts);
void recurrence_avx2(const double* diag, const double* offdiag, size_t n, const double* lambdas,
                     size_t m, double* values, int* rescales);
void twisted_vector_avx2(const double* diag, const double* offdiag, const double* offdiag_sq, size_t n,
                          double pivmin, const double* lambdas, size_t m, double* values, int* twists,
                          double* work);
#endif

#if defined(__aarch64__)
void sturm_count_neon(const double* diag, const double* offdiag_sq, size_t n, double pivmin,
                      const double* shifts, size_t m, int* counts);
void recurrence_neon(const double* diag, const double* offdiag, size_t n, const double* lambdas,
                     size_t m, double* values, int* rescales);
void twisted_vector_neon(const double* diag, const double* offdiag, const double* offdiag_sq, size_t n,
                          double pivmin, const double* lambdas, size_t m, double* values, int* twists,
                          double* work);
#endif

}  // namespace orthoentropy::kernels::detail
