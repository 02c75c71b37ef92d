#pragma once

// Discrete Shannon entropies (in nats) of the squared columns and rows of Psi,
// the generalised entropy S_n(lambda), and the trigonometric "modified"
// entropies that the Chebyshev cases reduce to.
//
// Column and row indices are 1-based throughout. Spectral columns are ordered
// by ascending zero; theorem_index() converts to the angular order used by the
// Chebyshev closed forms.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orthoentropy/families.hpp"
#include "orthoentropy/spectrum.hpp"

namespace orthoentropy::entropy {

/// Components below this are treated as exact zeros (0 log 0 = 0).
inline constexpr double kZeroProbability = 1e-300;

/// Nonnegative weights summing to one within 1e-12.
class ProbabilityVector {
public:
  explicit ProbabilityVector(std::vector<double> p);
  /// Squares of the components of a unit vector.
  static ProbabilityVector from_unit_vector(std::span<const double> v);

  std::span<const double> values() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }

private:
  std::vector<double> p_;
};

/// p log p with the 0 log 0 = 0 convention.
double xlogx(double p);

double shannon_entropy(const ProbabilityVector& p);

/// S_{n,j}: entropy of the squared j-th column of Psi.
double entropy_at_zero(const spectrum::SpectralDecomposition& dec, std::size_t j);

/// S_n(lambda) = -log l_n(lambda) - l_n(lambda) sum p_{i-1}^2 log p_{i-1}^2 at any lambda.
double entropy_at_lambda(const spectrum::JacobiMatrix& m, double lambda);
double entropy_at_lambda(const families::FamilySpec& spec, int n, double lambda);

/// S_n^i: entropy of the squared i-th row of Psi.
double dual_entropy(const spectrum::SpectralDecomposition& dec, std::size_t i);

/// sum_{i=1}^{n-1} c_i log c_i, c_i = cos^2((2j-1) pi i / (2n)), 1 <= j <= n.
double modified_entropy_cheb1(int n, int j);
/// sum_{k=1}^{n-1} s_k log s_k, s_k = sin^2(k j pi / n), 1 <= j <= n-1.
double modified_entropy_cheb2(int n, int j);

/// Ascending-zero index k (1-based) to the angular index j = n + 1 - k.
std::size_t theorem_index(std::size_t ascending_index, std::size_t n);

enum class Method { spectral, closed_form };

struct EntropyTable {
  int n = 0;
  families::FamilySpec family = families::FamilySpec::chebyshev1();
  std::vector<double> zeros;
  std::vector<double> christoffel;
  std::vector<double> values;  // S_{n,j}, j ascending
  std::optional<std::vector<double>> dual_values;
  Method method = Method::spectral;
};

EntropyTable entropy_table(const families::FamilySpec& spec, int n, bool include_dual = false);

const char* to_string(Method m);

}  // namespace orthoentropy::entropy
