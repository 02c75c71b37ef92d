#include "orthoentropy/entropy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orthoentropy::entropy {

namespace {

void check_index(std::size_t index, std::size_t upper, const char* what) {
  if (index < 1 || index > upper) {
    std::ostringstream msg;
    msg << what << ": index " << index << " outside 1.." << upper;
    throw std::out_of_range(msg.str());
  }
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw std::invalid_argument("ProbabilityVector: empty");
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0)) throw std::invalid_argument("ProbabilityVector: negative or NaN weight");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ProbabilityVector: weights sum to " << sum;
    throw std::invalid_argument(msg.str());
  }
}

ProbabilityVector ProbabilityVector::from_unit_vector(std::span<const double> v) {
  std::vector<double> p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] * v[i];
  return ProbabilityVector(std::move(p));
}

double xlogx(double p) { return p < kZeroProbability ? 0.0 : p * std::log(p); }

double shannon_entropy(const ProbabilityVector& p) {
  double s = 0.0;
  for (double v : p.values()) s -= xlogx(v);
  return s;
}

double entropy_at_zero(const spectrum::SpectralDecomposition& dec, std::size_t j) {
  check_index(j, dec.n, "entropy_at_zero");
  return shannon_entropy(ProbabilityVector::from_unit_vector(dec.psi.column(j - 1)));
}

double entropy_at_lambda(const spectrum::JacobiMatrix& m, double lambda) {
  // With p = e^L u, ||u|| = 1: l_n = e^{-2L} and log p^2 = log u^2 + 2L.
  const auto vec = spectrum::evaluate_polynomial_vector(m, lambda);
  const double two_log_norm = 2.0 * vec.log_norm;
  double weighted = 0.0;
  for (double u : vec.unit) {
    const double u2 = u * u;
    if (u2 < kZeroProbability) continue;
    weighted += u2 * (std::log(u2) + two_log_norm);
  }
  return two_log_norm - weighted;
}

double entropy_at_lambda(const families::FamilySpec& spec, int n, double lambda) {
  return entropy_at_lambda(spectrum::JacobiMatrix::from_family(spec, n), lambda);
}

double dual_entropy(const spectrum::SpectralDecomposition& dec, std::size_t i) {
  check_index(i, dec.n, "dual_entropy");
  std::vector<double> row(dec.n);
  for (std::size_t j = 0; j < dec.n; ++j) row[j] = dec.psi(i - 1, j);
  return shannon_entropy(ProbabilityVector::from_unit_vector(row));
}

double modified_entropy_cheb1(int n, int j) {
  if (n < 1) throw std::invalid_argument("modified_entropy_cheb1: n must be positive");
  check_index(static_cast<std::size_t>(j), static_cast<std::size_t>(n), "modified_entropy_cheb1");
  // cos^2 has period pi: reduce (2j-1) i modulo 2n before scaling by pi / 2n.
  const long long period = 2LL * n;
  double sum = 0.0;
  for (int i = 1; i < n; ++i) {
    const long long r = ((2LL * j - 1) * i) % period;
    const double c = std::cos(std::numbers::pi * static_cast<double>(r) / static_cast<double>(period));
    sum += xlogx(c * c);
  }
  return sum;
}

double modified_entropy_cheb2(int n, int j) {
  if (n < 2) throw std::invalid_argument("modified_entropy_cheb2: n must be at least 2");
  check_index(static_cast<std::size_t>(j), static_cast<std::size_t>(n - 1), "modified_entropy_cheb2");
  double sum = 0.0;
  for (int k = 1; k < n; ++k) {
    const long long r = (static_cast<long long>(k) * j) % n;
    const double s = std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
    sum += xlogx(s * s);
  }
  return sum;
}

std::size_t theorem_index(std::size_t ascending_index, std::size_t n) {
  check_index(ascending_index, n, "theorem_index");
  return n + 1 - ascending_index;
}

EntropyTable entropy_table(const families::FamilySpec& spec, int n, bool include_dual) {
  const auto dec = spectrum::decompose(spec, n);
  EntropyTable table;
  table.n = n;
  table.family = spec;
  table.zeros = dec.zeros;
  table.christoffel = dec.christoffel;
  table.values.resize(dec.n);
  for (std::size_t j = 1; j <= dec.n; ++j) table.values[j - 1] = entropy_at_zero(dec, j);
  if (include_dual) {
    std::vector<double> dual(dec.n);
    for (std::size_t i = 1; i <= dec.n; ++i) dual[i - 1] = dual_entropy(dec, i);
    table.dual_values = std::move(dual);
  }
  table.method = Method::spectral;
  return table;
}

const char* to_string(Method m) { return m == Method::spectral ? "spectral" : "closed_form"; }

}  // namespace orthoentropy::entropy
