#include "orthoentropy/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "orthoentropy/entropy.hpp"
#include "orthoentropy/numthy.hpp"
#include "orthoentropy/spectrum.hpp"

namespace orthoentropy::closedform {

namespace {

constexpr double kLog2 = std::numbers::ln2;

void check_args(int n, int j) {
  if (n < 1) throw std::invalid_argument("closed form: n must be positive");
  if (j < 1 || j > n) throw std::out_of_range("closed form: j must lie in 1..n");
}

}  // namespace

ClosedFormResult theorem1(int n, int j, const specfun::RFunctionEvaluator& r) {
  check_args(n, j);
  const int d = static_cast<int>(numthy::gcd(2 * j - 1, n));
  const double value = std::log(static_cast<double>(n)) + kLog2 - 1.0 + kLog2 / n +
                       r(static_cast<double>(d) / (2.0 * n));
  return {n, j, d, value, 1};
}

ClosedFormResult theorem2(int n, int j, const specfun::RFunctionEvaluator& r) {
  check_args(n, j);
  const int d = static_cast<int>(numthy::gcd(j, n + 1));
  const double value = std::log(n + 1.0) + kLog2 - 1.0 + r(static_cast<double>(d) / (n + 1.0));
  return {n, j, d, value, 2};
}

ClosedFormResult closed_form(int kind, int n, int j, const specfun::RFunctionEvaluator& r) {
  if (kind == 1) return theorem1(n, j, r);
  if (kind == 2) return theorem2(n, j, r);
  throw std::invalid_argument("closed form: kind must be 1 or 2");
}

std::vector<ClosedFormResult> closed_form_profile(int kind, int n, const specfun::RFunctionEvaluator& r) {
  std::vector<ClosedFormResult> out;
  out.reserve(n);
  for (int j = 1; j <= n; ++j) out.push_back(closed_form(kind, n, j, r));
  return out;
}

ExtremalSummary extremal_summary(int kind, int n) {
  const auto profile = closed_form_profile(kind, n);
  ExtremalSummary s;
  const auto [lo, hi] = std::minmax_element(profile.begin(), profile.end(),
                                            [](const auto& a, const auto& b) { return a.value < b.value; });
  s.min_value = lo->value;
  s.max_value = hi->value;
  // Equal d gives the identical floating-point evaluation, so exact equality groups indices.
  for (const auto& entry : profile) {
    if (entry.value == s.min_value) s.argmin_set.push_back(entry.j);
    if (entry.value == s.max_value) s.argmax_set.push_back(entry.j);
  }
  return s;
}

std::vector<int> strict_local_minima(const std::vector<ClosedFormResult>& profile) {
  std::vector<int> out;
  const std::size_t n = profile.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool below_left = i == 0 || profile[i].value < profile[i - 1].value;
    const bool below_right = i + 1 == n || profile[i].value < profile[i + 1].value;
    if (below_left && below_right && n > 1) out.push_back(profile[i].j);
  }
  return out;
}

ComparisonReport compare(const families::FamilySpec& family, int n, double threshold) {
  int kind = 0;
  if (family.kind() == families::FamilyKind::chebyshev1) kind = 1;
  if (family.kind() == families::FamilyKind::chebyshev2) kind = 2;
  if (kind == 0) throw std::invalid_argument("compare: closed forms exist only for Chebyshev families");
  if (!(threshold > 0.0)) throw std::invalid_argument("compare: threshold must be positive");

  const auto dec = spectrum::decompose(family, n);
  ComparisonReport report;
  report.family = family;
  report.n = n;
  report.threshold = threshold;
  report.per_j_diffs.assign(n, 0.0);
  for (std::size_t k = 1; k <= dec.n; ++k) {
    const auto j = static_cast<int>(entropy::theorem_index(k, dec.n));
    const double diff = std::abs(entropy::entropy_at_zero(dec, k) - closed_form(kind, n, j).value);
    report.per_j_diffs[j - 1] = diff;
    report.max_abs_diff = std::max(report.max_abs_diff, diff);
  }
  report.pass = report.max_abs_diff <= threshold;
  return report;
}

}  // namespace orthoentropy::closedform
