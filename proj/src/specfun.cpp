#include "orthoentropy/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace orthoentropy::specfun {

namespace {

// Asymptotic expansion is applied once the argument reaches this value; the
// first omitted term, B_14 / (14 x^14), is below 1e-15 here.
constexpr double kDigammaAsymptoticStart = 10.0;

double digamma_asymptotic(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // -sum B_2k / (2k x^2k), k = 1..6
  const double tail =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760))))));
  return std::log(x) - 0.5 * inv - tail;
}

// Euler-Maclaurin with 16 explicit terms and Bernoulli corrections through B_12.
double zeta_euler_maclaurin(double s) {
  constexpr int kCut = 16;
  constexpr std::array<double, 6> kBernoulliOverFactorial = {
      1.0 / 6 / 2,
      -1.0 / 30 / 24,
      1.0 / 42 / 720,
      -1.0 / 30 / 40320,
      5.0 / 66 / 3628800,
      -691.0 / 2730 / 479001600,
  };
  const double n = kCut;
  double correction = 0.0;
  double rising = s;  // s (s+1) ... (s+2i-2)
  double power = std::pow(n, -s - 1.0);
  for (std::size_t i = 0; i < kBernoulliOverFactorial.size(); ++i) {
    correction += kBernoulliOverFactorial[i] * rising * power;
    rising *= (s + 2.0 * i + 1.0) * (s + 2.0 * i + 2.0);
    power /= n * n;
  }
  double sum = correction + 0.5 * std::pow(n, -s) + std::pow(n, 1.0 - s) / (s - 1.0);
  for (int m = kCut - 1; m >= 2; --m) sum += std::pow(static_cast<double>(m), -s);
  return 1.0 + sum;
}

}  // namespace

double digamma(double x) {
  if (!std::isfinite(x)) throw std::domain_error("digamma: argument is not finite");
  if (x <= 0.0 && x == std::floor(x)) {
    std::ostringstream msg;
    msg << "digamma: pole at " << x;
    throw PoleError(msg.str());
  }
  if (x < 0.0) {
    // psi(x) = psi(1 - x) - pi cot(pi x)
    return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
  }
  double shift = 0.0;
  while (x < kDigammaAsymptoticStart) {
    shift += 1.0 / x;
    x += 1.0;
  }
  return digamma_asymptotic(x) - shift;
}

double zeta_odd(int k) {
  if (k < 1) throw std::invalid_argument("zeta_odd: k must be >= 1");
  return zeta_euler_maclaurin(2.0 * k + 1.0);
}

RFunctionEvaluator::RFunctionEvaluator(RMode mode, double series_tolerance)
    : mode_(mode), tolerance_(series_tolerance) {
  if (!(series_tolerance > 0.0)) {
    throw std::invalid_argument("RFunctionEvaluator: series tolerance must be positive");
  }
  for (int k = 1; k <= kMaxZetaIndex; ++k) zeta_odd_[k - 1] = zeta_odd(k);
}

double RFunctionEvaluator::zeta(int k) const {
  if (k < 1 || k > kMaxZetaIndex) throw std::out_of_range("RFunctionEvaluator::zeta: index");
  return zeta_odd_[k - 1];
}

double RFunctionEvaluator::digamma_form(double x) const {
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("R(x): x must lie in [0, 1)");
  if (x == 0.0) return 0.0;
  return x * (digamma(1.0 - x) + 2.0 * kEulerGamma + digamma(1.0 + x));
}

double RFunctionEvaluator::series_form(double x) const {
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("R(x): x must lie in [0, 1)");
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  const double tail_factor = 1.0 / (1.0 - x2);
  double power = x;  // x^(2k+1)
  double sum = 0.0;
  for (int k = 1; k <= kMaxZetaIndex; ++k) {
    power *= x2;
    const double term = 2.0 * zeta_odd_[k - 1] * power;  // |k-th term of R|
    if (term < tolerance_ && term * tail_factor < tolerance_) return -sum;
    sum += term;
  }
  std::ostringstream msg;
  msg << "R(x): series did not converge within " << kMaxZetaIndex << " terms at x = " << x;
  throw std::domain_error(msg.str());
}

double RFunctionEvaluator::operator()(double x) const {
  switch (mode_) {
    case RMode::digamma_form:
      return digamma_form(x);
    case RMode::series_form:
      return series_form(x);
    case RMode::cross_checked: {
      const double closed = digamma_form(x);
      const double series = series_form(x);
      if (std::abs(closed - series) > 10.0 * tolerance_) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "R(x): digamma form " << closed << " and series form " << series
            << " disagree at x = " << x;
        throw CrossCheckError(msg.str());
      }
      return closed;
    }
  }
  throw std::logic_error("R(x): unknown mode");
}

const RFunctionEvaluator& default_r_evaluator() {
  static const RFunctionEvaluator evaluator{RMode::digamma_form};
  return evaluator;
}

std::string to_string(RMode mode) {
  switch (mode) {
    case RMode::digamma_form:
      return "digamma_form";
    case RMode::series_form:
      return "series_form";
    case RMode::cross_checked:
      return "cross_checked";
  }
  return "unknown";
}

}  // namespace orthoentropy::specfun
