#pragma once

// Exact entropies of the orthonormal Chebyshev polynomials:
//
//   first kind:  S_{n,j} = log n + log 2 - 1 + log 2 / n + R(d / 2n),  d = GCD(2j - 1, n)
//   second kind: S_{n,j} = log(n + 1) + log 2 - 1 + R(d / (n + 1)),   d = GCD(j, n + 1)
//
// j is the angular index: the j-th zero is cos((2j-1) pi / 2n), resp. cos(j pi / (n+1)).

#include <vector>

#include "orthoentropy/families.hpp"
#include "orthoentropy/specfun.hpp"

namespace orthoentropy::closedform {

struct ClosedFormResult {
  int n = 0;
  int j = 0;
  int d = 0;
  double value = 0.0;
  int kind = 1;
};

ClosedFormResult theorem1(int n, int j, const specfun::RFunctionEvaluator& r = specfun::default_r_evaluator());
ClosedFormResult theorem2(int n, int j, const specfun::RFunctionEvaluator& r = specfun::default_r_evaluator());
/// Dispatches on kind (1 or 2).
ClosedFormResult closed_form(int kind, int n, int j,
                             const specfun::RFunctionEvaluator& r = specfun::default_r_evaluator());

/// theorem values for j = 1..n, indexed by j - 1.
std::vector<ClosedFormResult> closed_form_profile(int kind, int n,
                                                  const specfun::RFunctionEvaluator& r = specfun::default_r_evaluator());

struct ExtremalSummary {
  double max_value = 0.0;
  std::vector<int> argmax_set;
  double min_value = 0.0;
  std::vector<int> argmin_set;
};

ExtremalSummary extremal_summary(int kind, int n);

/// Indices j whose value is strictly below each existing neighbour.
std::vector<int> strict_local_minima(const std::vector<ClosedFormResult>& profile);

struct ComparisonReport {
  families::FamilySpec family = families::FamilySpec::chebyshev1();
  int n = 0;
  double threshold = 1e-9;
  double max_abs_diff = 0.0;
  /// |spectral - closed form| for angular index j = 1..n.
  std::vector<double> per_j_diffs;
  bool pass = true;
};

inline constexpr double kDefaultCompareThreshold = 1e-9;

/// Spectral route versus the closed form for every j; family must be a
/// Chebyshev kind.
ComparisonReport compare(const families::FamilySpec& family, int n,
                         double threshold = kDefaultCompareThreshold);

}  // namespace orthoentropy::closedform
