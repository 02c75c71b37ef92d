#pragma once

// Special functions behind the Chebyshev closed forms: the digamma function,
// odd zeta values and the correction function
//
//   R(x) = x (psi(1 - x) + 2 gamma + psi(1 + x)) = -2 sum_{k>=1} zeta(2k+1) x^(2k+1).

#include <array>
#include <stdexcept>
#include <string>

namespace orthoentropy::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286061;

class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Thrown when the digamma and series forms of R disagree.
class CrossCheckError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// psi(x) = Gamma'(x) / Gamma(x). Throws PoleError at x = 0, -1, -2, ...
double digamma(double x);

/// zeta(2k + 1) for k >= 1.
double zeta_odd(int k);

enum class RMode { digamma_form, series_form, cross_checked };

class RFunctionEvaluator {
public:
  static constexpr int kMaxZetaIndex = 64;
  static constexpr double kDefaultTolerance = 1e-14;

  explicit RFunctionEvaluator(RMode mode = RMode::digamma_form,
                              double series_tolerance = kDefaultTolerance);

  /// Evaluates R on [0, 1). In cross_checked mode both forms are computed and
  /// must agree within 10 * series_tolerance; the digamma form is returned.
  double operator()(double x) const;

  double digamma_form(double x) const;
  /// Truncated Taylor series. Stops once the next term and its geometric
  /// tail bound term / (1 - x^2) both drop below the tolerance.
  double series_form(double x) const;

  RMode mode() const noexcept { return mode_; }
  double series_tolerance() const noexcept { return tolerance_; }
  /// zeta(2k + 1) from the precomputed table, 1 <= k <= kMaxZetaIndex.
  double zeta(int k) const;

private:
  RMode mode_;
  double tolerance_;
  std::array<double, kMaxZetaIndex> zeta_odd_{};
};

/// Shared production evaluator (digamma form, default tolerance).
const RFunctionEvaluator& default_r_evaluator();

std::string to_string(RMode mode);

}  // namespace orthoentropy::specfun
