#pragma once

// Recurrence coefficients for the orthonormal families
//
//   lambda p_i = b_{i+1} p_{i+1} + a_{i+1} p_i + b_i p_{i-1},   p_{-1} = 0, p_0 = 1.

#include <string>
#include <vector>

namespace orthoentropy::families {

enum class FamilyKind { chebyshev1, chebyshev2, jacobi, pollaczek, meixner };

/// A polynomial family with validated parameters. Construct through the
/// named factories; parameter-domain violations throw std::invalid_argument.
class FamilySpec {
public:
  static FamilySpec chebyshev1();
  static FamilySpec chebyshev2();
  /// alpha, beta > -1 and alpha + beta > -1. The diagonal (alpha^2 - beta^2) / ...
  /// corresponds to the weight (1 + x)^alpha (1 - x)^beta on [-1, 1].
  static FamilySpec jacobi(double alpha, double beta);
  /// Symmetric Pollaczek p_n^theta(.; a): theta > 0, a >= 0.
  static FamilySpec pollaczek(double theta, double a);
  /// Meixner M_n^(beta, c): beta > 0, 0 < c < 1.
  static FamilySpec meixner(double beta, double c);

  FamilyKind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return p1_; }
  double beta() const noexcept { return kind_ == FamilyKind::meixner ? p1_ : p2_; }
  double theta() const noexcept { return p1_; }
  double a() const noexcept { return p2_; }
  double c() const noexcept { return p2_; }

  /// True when every a_i vanishes (zeros symmetric about the origin).
  bool symmetric() const noexcept;
  /// e.g. "jacobi(alpha=1.2,beta=8.9)".
  std::string describe() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
  FamilySpec(FamilyKind kind, double p1, double p2) : kind_(kind), p1_(p1), p2_(p2) {}

  FamilyKind kind_;
  double p1_;
  double p2_;
};

std::string to_string(FamilyKind kind);
/// Parses "chebyshev1", "chebyshev2", "jacobi", "pollaczek", "meixner".
FamilyKind parse_family_kind(const std::string& name);

struct RecurrencePair {
  double a;
  double b;
};

/// (a_i, b_i) for i >= 1.
RecurrencePair coefficients(const FamilySpec& spec, int i);

/// a_1..a_n and b_1..b_n, stored 0-based (a[0] = a_1).
struct RecurrenceCoefficients {
  std::vector<double> a;
  std::vector<double> b;
};

RecurrenceCoefficients recurrence_coefficients(const FamilySpec& spec, int n);

/// Orthonormal Chebyshev polynomial of the given kind (1 or 2) and degree m at
/// lambda = cos(theta), evaluated trigonometrically. For kind 2 the endpoint
/// limits theta = 0, pi are taken.
double chebyshev_explicit(int kind, int m, double theta);

}  // namespace orthoentropy::families
