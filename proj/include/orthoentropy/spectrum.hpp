#pragma once

// Zeros, Christoffel weights and the orthogonal Psi matrix of a Jacobi matrix.
//
// Eigenvalues come from Sturm-count bisection polished by Newton steps on the
// characteristic polynomial. Column j of Psi is sqrt(l_n(lambda_j)) P_j with
// P_j = (p_0, ..., p_{n-1}) at the j-th zero. It is obtained by running the
// three-term recurrence inwards from both ends and joining at the entry where
// the two sweeps meet best (a twisted factorization), then normalising with
// p_0 = 1 fixing the sign. A forward-only sweep amplifies the zero's rounding
// error wherever P_j decays, which ruins Meixner columns at moderate n.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "orthoentropy/families.hpp"
#include "orthoentropy/kernels.hpp"

namespace orthoentropy::spectrum {

class DegenerateMatrixError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Symmetric tridiagonal matrix with diagonal a_1..a_n and off-diagonal
/// b_1..b_{n-1}; every b_i must be positive.
class JacobiMatrix {
public:
  JacobiMatrix(std::vector<double> diag, std::vector<double> offdiag);
  static JacobiMatrix from_family(const families::FamilySpec& spec, int n);

  std::size_t size() const noexcept { return diag_.size(); }
  std::span<const double> diag() const noexcept { return diag_; }
  std::span<const double> offdiag() const noexcept { return offdiag_; }
  /// Gershgorin bound on the spectral radius.
  double spectral_bound() const noexcept;

private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }
  std::span<const double> column(std::size_t j) const { return {data_.data() + j * rows_, rows_}; }
  std::span<double> column(std::size_t j) { return {data_.data() + j * rows_, rows_}; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Ascending eigenvalues (the zeros of p_n).
std::vector<double> eigenvalues(const JacobiMatrix& m,
                                const kernels::KernelSet& k = kernels::active_kernels());

struct PolynomialVector {
  /// (p_0, ..., p_{n-1}) / ||(p_0, ..., p_{n-1})||.
  std::vector<double> unit;
  /// log of the Euclidean norm before normalisation; l_n = exp(-2 log_norm).
  double log_norm = 0.0;
};

/// p_0..p_{n-1} at lambda, with overflow-safe rescaling. Only the first n-1
/// diagonal and off-diagonal entries of m are used.
PolynomialVector evaluate_polynomial_vector(const JacobiMatrix& m, double lambda,
                                            const kernels::KernelSet& k = kernels::active_kernels());
PolynomialVector evaluate_polynomial_vector(const families::FamilySpec& spec, int n, double lambda);

struct SpectralDecomposition {
  std::size_t n = 0;
  std::vector<double> zeros;        // ascending
  std::vector<double> christoffel;  // l_n(zero_j)
  std::vector<double> log_norms;    // -log(l_n(zero_j)) / 2
  Matrix psi;                       // column j: unit polynomial vector at zero_j

  /// Weights of the normalised counting measure of the zeros.
  std::span<const double> counting_weights() const noexcept { return christoffel; }
};

SpectralDecomposition decompose(const JacobiMatrix& m,
                                const kernels::KernelSet& k = kernels::active_kernels());
SpectralDecomposition decompose(const families::FamilySpec& spec, int n);

/// Christoffel function l_n(lambda) = 1 / sum_{k<n} p_k(lambda)^2 at any lambda.
double christoffel_at(const families::FamilySpec& spec, int n, double lambda);

}  // namespace orthoentropy::spectrum
