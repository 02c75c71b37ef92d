#pragma once

// Exact integer machinery for the piecewise-linear folding maps phi_j^(n).
//
// phi_j^(n) is the linear spline through the nodes (m n / j, n (1 - (-1)^m) / 2),
// m in Z. It folds the real line onto [0, n]; on integers it reduces to
// |D(j k, 2n)| where D is the remainder centred on zero.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace orthoentropy::numthy {

using Int = std::int64_t;

/// Greatest common divisor of two positive integers.
Int gcd(Int a, Int b);

/// The unique r with -q/2 <= r < q/2 and p = r (mod q). Requires p >= 0, q >= 1.
Int shifted_remainder(Int p, Int q);

/// Exact rational with positive denominator, kept in lowest terms.
/// Arithmetic throws std::overflow_error instead of wrapping.
class Rational {
public:
  constexpr Rational() = default;
  Rational(Int numerator, Int denominator = 1);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);

private:
  Int num_ = 0;
  Int den_ = 1;
};

std::string to_string(const Rational& r);

class PhiFunction {
public:
  PhiFunction(Int n, Int j);

  Int n() const noexcept { return n_; }
  Int j() const noexcept { return j_; }

private:
  Int n_;
  Int j_;
};

/// phi at an integer point, via |D(j |k|, 2n)|. Result lies in [0, n].
Int phi_at_integer(const PhiFunction& f, Int k);

/// phi at an exact rational point: |j x - 2 m n| on [(2m-1) n / j, (2m+1) n / j].
Rational phi_at_real(const PhiFunction& f, const Rational& x);

struct ClauseVerdict {
  std::string clause;
  bool pass = true;
  std::string detail;
};

struct MainLemmaReport {
  Int n = 0;
  Int j = 0;
  Int d = 0;   // GCD(j, n)
  Int d2 = 0;  // GCD(j, 2n)
  /// Values phi(k), k = 1..n-1, excluding the boundary values 0 and n.
  std::set<Int> image_values;
  std::map<Int, Int> multiplicity_map;
  std::vector<ClauseVerdict> verdicts;

  bool passed() const noexcept;
  /// First failing clause, or empty.
  std::string first_failure() const;
};

/// Exhaustive enumeration check of the folding-map lemma for (n, j):
/// shift and scaling identities on [0, 2n], then whichever of the
/// "d = n", "GCD(j, 2n) = d < n" and "GCD(j, 2n) = 2d, d < n" clauses applies.
MainLemmaReport verify_main_lemma(Int n, Int j);

}  // namespace orthoentropy::numthy
