#include "orthoentropy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace orthoentropy::spectrum {

namespace {

constexpr double kBisectionRelTol = 1e-14;
constexpr int kNewtonSteps = 3;
constexpr double kLogRescale = 512.0 * std::numbers::ln2;

// chi_n / chi_n' for the monic characteristic polynomial of the leading n x n block.
double newton_ratio(const JacobiMatrix& m, double lambda) {
  const auto a = m.diag();
  const auto b = m.offdiag();
  double c_prev = 1.0;
  double c = lambda - a[0];
  double d_prev = 0.0;
  double d = 1.0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const double shift = lambda - a[i];
    const double b2 = b[i - 1] * b[i - 1];
    double c_next = shift * c - b2 * c_prev;
    double d_next = c + shift * d - b2 * d_prev;
    if (std::max(std::abs(c_next), std::abs(d_next)) > 0x1p512) {
      c_next *= 0x1p-512;
      d_next *= 0x1p-512;
      c *= 0x1p-512;
      d *= 0x1p-512;
    }
    c_prev = c;
    c = c_next;
    d_prev = d;
    d = d_next;
  }
  return c / d;
}

PolynomialVector normalise(std::span<const double> raw, int rescales) {
  double largest = 0.0;
  for (double v : raw) largest = std::max(largest, std::abs(v));
  double sumsq = 0.0;
  for (double v : raw) {
    const double s = v / largest;
    sumsq += s * s;
  }
  PolynomialVector out;
  out.unit.resize(raw.size());
  const double root = std::sqrt(sumsq);
  for (std::size_t i = 0; i < raw.size(); ++i) out.unit[i] = (raw[i] / largest) / root;
  out.log_norm = rescales * kLogRescale + std::log(largest) + 0.5 * std::log(sumsq);
  return out;
}

}  // namespace

JacobiMatrix::JacobiMatrix(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) throw std::invalid_argument("JacobiMatrix: empty matrix");
  if (offdiag_.size() + 1 != diag_.size()) {
    throw std::invalid_argument("JacobiMatrix: off-diagonal must have n - 1 entries");
  }
  for (std::size_t i = 0; i < offdiag_.size(); ++i) {
    if (!(offdiag_[i] > 0.0) || !std::isfinite(offdiag_[i])) {
      std::ostringstream msg;
      msg << "JacobiMatrix: b_" << i + 1 << " = " << offdiag_[i] << " is not positive";
      throw DegenerateMatrixError(msg.str());
    }
  }
  for (double a : diag_) {
    if (!std::isfinite(a)) throw std::invalid_argument("JacobiMatrix: non-finite diagonal entry");
  }
}

JacobiMatrix JacobiMatrix::from_family(const families::FamilySpec& spec, int n) {
  auto coeffs = families::recurrence_coefficients(spec, n);
  coeffs.b.pop_back();
  return JacobiMatrix(std::move(coeffs.a), std::move(coeffs.b));
}

double JacobiMatrix::spectral_bound() const noexcept {
  double bound = 0.0;
  const std::size_t n = diag_.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag_[i]);
    if (i > 0) row += offdiag_[i - 1];
    if (i + 1 < n) row += offdiag_[i];
    bound = std::max(bound, row);
  }
  return bound;
}

std::vector<double> eigenvalues(const JacobiMatrix& m, const kernels::KernelSet& k) {
  const std::size_t n = m.size();
  if (n == 1) return {m.diag()[0]};

  std::vector<double> offdiag_sq(n - 1);
  double max_b2 = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    offdiag_sq[i] = m.offdiag()[i] * m.offdiag()[i];
    max_b2 = std::max(max_b2, offdiag_sq[i]);
  }
  const double pivmin = std::numeric_limits<double>::min() * max_b2;
  const double bound = m.spectral_bound();
  const double tol = kBisectionRelTol * std::max(1.0, bound);
  const double edge = bound * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()) + tol;

  // Eigenvalue i lies in [lo[i], hi[i]): count(lo) <= i < count(hi).
  std::vector<double> lo(n, -edge);
  std::vector<double> hi(n, edge);
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), std::size_t{0});
  std::vector<double> shifts;
  std::vector<int> counts;
  while (!active.empty()) {
    shifts.resize(active.size());
    counts.resize(active.size());
    for (std::size_t s = 0; s < active.size(); ++s) {
      const std::size_t i = active[s];
      shifts[s] = 0.5 * (lo[i] + hi[i]);
    }
    k.sturm_count(m.diag(), offdiag_sq, pivmin, shifts, counts);
    std::size_t kept = 0;
    for (std::size_t s = 0; s < active.size(); ++s) {
      const std::size_t i = active[s];
      const double mid = shifts[s];
      if (static_cast<std::size_t>(counts[s]) > i) {
        hi[i] = mid;
      } else {
        lo[i] = mid;
      }
      const double mid_next = 0.5 * (lo[i] + hi[i]);
      const bool done = hi[i] - lo[i] <= tol || mid_next <= lo[i] || mid_next >= hi[i];
      if (!done) active[kept++] = i;
    }
    active.resize(kept);
  }

  std::vector<double> zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = 0.5 * (lo[i] + hi[i]);
    for (int step = 0; step < kNewtonSteps; ++step) {
      const double ratio = newton_ratio(m, x);
      if (!std::isfinite(ratio) || ratio == 0.0) break;
      const double next = x - ratio;
      if (next < lo[i] || next > hi[i]) break;
      x = next;
    }
    zeros[i] = x;
  }
  // Newton may leave two neighbours within an ulp of a shared bracket end.
  for (std::size_t i = 1; i < n; ++i) zeros[i] = std::max(zeros[i], std::nextafter(zeros[i - 1], edge));
  return zeros;
}

PolynomialVector evaluate_polynomial_vector(const JacobiMatrix& m, double lambda, const kernels::KernelSet& k) {
  const std::size_t n = m.size();
  std::vector<double> values(n);
  int rescales = 0;
  const double lambdas[] = {lambda};
  k.recurrence(m.diag(), m.offdiag(), lambdas, values, std::span<int>(&rescales, 1));
  return normalise(values, rescales);
}

PolynomialVector evaluate_polynomial_vector(const families::FamilySpec& spec, int n, double lambda) {
  return evaluate_polynomial_vector(JacobiMatrix::from_family(spec, n), lambda);
}

SpectralDecomposition decompose(const JacobiMatrix& m, const kernels::KernelSet& k) {
  const std::size_t n = m.size();
  SpectralDecomposition out;
  out.n = n;
  out.zeros = eigenvalues(m, k);
  // Forward recurrence at a zero amplifies the zero's rounding error along
  // decaying eigenvectors; the twisted factorization does not.
  std::vector<double> offdiag_sq(n - 1);
  double max_b2 = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    offdiag_sq[i] = m.offdiag()[i] * m.offdiag()[i];
    max_b2 = std::max(max_b2, offdiag_sq[i]);
  }
  const double pivmin = std::numeric_limits<double>::min() * max_b2;
  std::vector<double> values(n * n);
  std::vector<int> twists(n);
  k.twisted_vector(m.diag(), m.offdiag(), offdiag_sq, pivmin, out.zeros, values, twists);
  out.psi = Matrix(n, n);
  out.christoffel.resize(n);
  out.log_norms.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto vec = normalise(std::span<const double>(values.data() + j * n, n), 0);
    // p_0 = 1 fixes the sign; l_n = u_1^2 since p = u / u_1.
    const double u1 = vec.unit[0];
    if (u1 < 0.0) {
      for (double& v : vec.unit) v = -v;
    }
    std::copy(vec.unit.begin(), vec.unit.end(), out.psi.column(j).begin());
    out.christoffel[j] = u1 * u1;
    out.log_norms[j] = -std::log(std::abs(u1));
  }
  return out;
}

SpectralDecomposition decompose(const families::FamilySpec& spec, int n) {
  return decompose(JacobiMatrix::from_family(spec, n));
}

double christoffel_at(const families::FamilySpec& spec, int n, double lambda) {
  return std::exp(-2.0 * evaluate_polynomial_vector(spec, n, lambda).log_norm);
}

}  // namespace orthoentropy::spectrum
