#include "orthoentropy/families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orthoentropy::families {

FamilySpec FamilySpec::chebyshev1() { return {FamilyKind::chebyshev1, 0.0, 0.0}; }

FamilySpec FamilySpec::chebyshev2() { return {FamilyKind::chebyshev2, 0.0, 0.0}; }

FamilySpec FamilySpec::jacobi(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw std::invalid_argument("jacobi: alpha and beta must exceed -1");
  }
  if (!(alpha + beta > -1.0)) {
    throw std::invalid_argument("jacobi: alpha + beta must exceed -1");
  }
  return {FamilyKind::jacobi, alpha, beta};
}

FamilySpec FamilySpec::pollaczek(double theta, double a) {
  if (!(theta > 0.0)) throw std::invalid_argument("pollaczek: theta must be positive");
  if (!(a >= 0.0)) throw std::invalid_argument("pollaczek: a must be nonnegative");
  return {FamilyKind::pollaczek, theta, a};
}

FamilySpec FamilySpec::meixner(double beta, double c) {
  if (!(beta > 0.0)) throw std::invalid_argument("meixner: beta must be positive");
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("meixner: c must lie in (0, 1)");
  return {FamilyKind::meixner, beta, c};
}

bool FamilySpec::symmetric() const noexcept {
  switch (kind_) {
    case FamilyKind::chebyshev1:
    case FamilyKind::chebyshev2:
    case FamilyKind::pollaczek:
      return true;
    case FamilyKind::jacobi:
      return p1_ == p2_;
    case FamilyKind::meixner:
      return false;
  }
  return false;
}

std::string FamilySpec::describe() const {
  std::ostringstream out;
  out << to_string(kind_);
  switch (kind_) {
    case FamilyKind::jacobi:
      out << "(alpha=" << p1_ << ",beta=" << p2_ << ')';
      break;
    case FamilyKind::pollaczek:
      out << "(theta=" << p1_ << ",a=" << p2_ << ')';
      break;
    case FamilyKind::meixner:
      out << "(beta=" << p1_ << ",c=" << p2_ << ')';
      break;
    default:
      break;
  }
  return out.str();
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::chebyshev1:
      return "chebyshev1";
    case FamilyKind::chebyshev2:
      return "chebyshev2";
    case FamilyKind::jacobi:
      return "jacobi";
    case FamilyKind::pollaczek:
      return "pollaczek";
    case FamilyKind::meixner:
      return "meixner";
  }
  return "unknown";
}

FamilyKind parse_family_kind(const std::string& name) {
  for (auto kind : {FamilyKind::chebyshev1, FamilyKind::chebyshev2, FamilyKind::jacobi,
                    FamilyKind::pollaczek, FamilyKind::meixner}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

RecurrencePair coefficients(const FamilySpec& spec, int i) {
  if (i < 1) throw std::invalid_argument("coefficients: index must be >= 1");
  const double k = i;
  switch (spec.kind()) {
    case FamilyKind::chebyshev1:
      return {0.0, i == 1 ? 1.0 / std::numbers::sqrt2 : 0.5};
    case FamilyKind::chebyshev2:
      return {0.0, 0.5};
    case FamilyKind::jacobi: {
      const double al = spec.alpha();
      const double be = spec.beta();
      const double s = 2.0 * k + al + be;
      const double b = 2.0 / s * std::sqrt(k * (k + al) * (k + be) * (k + al + be) / ((s + 1.0) * (s - 1.0)));
      double a = 0.0;
      if (al != be) {
        // (alpha^2 - beta^2) / (s (s - 2)); at i = 1 the factor alpha + beta cancels.
        a = i == 1 ? (al - be) / s : (al * al - be * be) / (s * (s - 2.0));
      }
      return {a, b};
    }
    case FamilyKind::pollaczek: {
      const double th = spec.theta();
      const double t = k + th + spec.a();
      return {0.0, 0.5 * std::sqrt(k * (k + 2.0 * th - 1.0) / (t * (t - 1.0)))};
    }
    case FamilyKind::meixner: {
      const double be = spec.beta();
      const double c = spec.c();
      return {((k - 1.0) * (1.0 + c) + c * be) / (1.0 - c), std::sqrt(k * c * (k + be - 1.0)) / (1.0 - c)};
    }
  }
  throw std::logic_error("coefficients: unknown family");
}

RecurrenceCoefficients recurrence_coefficients(const FamilySpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("recurrence_coefficients: n must be >= 1");
  RecurrenceCoefficients out;
  out.a.reserve(n);
  out.b.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const auto [a, b] = coefficients(spec, i);
    out.a.push_back(a);
    out.b.push_back(b);
  }
  return out;
}

double chebyshev_explicit(int kind, int m, double theta) {
  if (m < 0) throw std::invalid_argument("chebyshev_explicit: degree must be nonnegative");
  if (kind == 1) {
    return m == 0 ? 1.0 : std::numbers::sqrt2 * std::cos(m * theta);
  }
  if (kind == 2) {
    const double s = std::sin(theta);
    if (std::abs(s) < 1e-300) {
      // U_m(+-1) = (+-1)^m (m + 1)
      const double sign = (std::cos(theta) < 0.0 && m % 2 == 1) ? -1.0 : 1.0;
      return sign * (m + 1.0);
    }
    return std::sin((m + 1.0) * theta) / s;
  }
  throw std::invalid_argument("chebyshev_explicit: kind must be 1 or 2");
}

}  // namespace orthoentropy::families
