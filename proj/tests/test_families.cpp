#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "orthoentropy/families.hpp"

using namespace orthoentropy::families;

namespace {

std::vector<FamilySpec> figure_families() {
  return {FamilySpec::jacobi(1.2, 8.9),   FamilySpec::jacobi(1.2, 3.4),  FamilySpec::pollaczek(1.2, 8.9),
          FamilySpec::pollaczek(1.2, 3.4), FamilySpec::meixner(3.4, 0.2), FamilySpec::meixner(8.9, 0.2),
          FamilySpec::meixner(3.4, 0.8),   FamilySpec::meixner(8.9, 0.8)};
}

// Gram matrix deviation of p_0..p_{count-1} under the given moment functional.
oracle::ld gram_error(const FamilySpec& spec, int count, const std::vector<oracle::ld>& moments) {
  const auto coeffs = recurrence_coefficients(spec, count);
  std::vector<oracle::ld> a(coeffs.a.begin(), coeffs.a.end());
  std::vector<oracle::ld> b(coeffs.b.begin(), coeffs.b.end());
  const auto polys = oracle::recurrence_polys(a, b, count);
  oracle::ld worst = 0;
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j <= i; ++j) {
      const auto prod = oracle::poly_mul(polys[i], polys[j]);
      oracle::ld integral = 0;
      for (std::size_t m = 0; m < prod.size(); ++m) integral += prod[m] * moments[m];
      worst = std::max(worst, std::abs(integral - (i == j ? 1 : 0)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("coefficient examples") {
  for (int i = 1; i <= 10; ++i) {
    const auto c = coefficients(FamilySpec::chebyshev2(), i);
    CHECK(c.a == 0.0);
    CHECK(c.b == 0.5);
  }
  const auto t1 = coefficients(FamilySpec::chebyshev1(), 1);
  CHECK(t1.a == 0.0);
  CHECK(t1.b == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-16));
  CHECK(coefficients(FamilySpec::chebyshev1(), 2).b == 0.5);

  const auto m = coefficients(FamilySpec::meixner(3.4, 0.2), 1);
  CHECK(m.a == doctest::Approx(0.85).epsilon(1e-15));
  CHECK(m.b == doctest::Approx(std::sqrt(0.68) / 0.8).epsilon(1e-15));
  CHECK_THROWS_AS(coefficients(FamilySpec::chebyshev1(), 0), std::invalid_argument);
}

TEST_CASE("explicit Chebyshev evaluators: examples") {
  for (double theta : {0.0, 0.3, 1.0, 2.5, std::numbers::pi}) {
    CHECK(chebyshev_explicit(1, 0, theta) == 1.0);
    CHECK(chebyshev_explicit(2, 0, theta) == doctest::Approx(1.0));
  }
  CHECK(std::abs(chebyshev_explicit(1, 3, std::numbers::pi / 6)) < 1e-15);
  CHECK(chebyshev_explicit(2, 4, 0.0) == 5.0);
  CHECK(chebyshev_explicit(2, 4, std::numbers::pi) == 5.0);
  CHECK(chebyshev_explicit(2, 3, std::numbers::pi) == -4.0);
}

TEST_CASE("Chebyshev recurrences reproduce the explicit polynomials") {
  for (int kind : {1, 2}) {
    const auto spec = kind == 1 ? FamilySpec::chebyshev1() : FamilySpec::chebyshev2();
    const auto coeffs = recurrence_coefficients(spec, 21);
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const double theta = std::numbers::pi * (s + 0.5) / 100.0;
      const double x = std::cos(theta);
      double prev = 0.0, cur = 1.0;
      for (int m = 0; m <= 20; ++m) {
        worst = std::max(worst, std::abs(cur - chebyshev_explicit(kind, m, theta)));
        const double prev_b = m == 0 ? 0.0 : coeffs.b[m - 1];
        const double next = ((x - coeffs.a[m]) * cur - prev_b * prev) / coeffs.b[m];
        prev = cur;
        cur = next;
      }
    }
    CAPTURE(kind);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("off-diagonal coefficients are positive up to i = 500") {
  auto all = figure_families();
  all.push_back(FamilySpec::chebyshev1());
  all.push_back(FamilySpec::chebyshev2());
  all.push_back(FamilySpec::jacobi(-0.5, -0.4));
  for (const auto& spec : all) {
    const auto c = recurrence_coefficients(spec, 500);
    REQUIRE(c.a.size() == 500);
    REQUIRE(c.b.size() == 500);
    for (int i = 0; i < 500; ++i) {
      REQUIRE(c.b[i] > 0.0);
      REQUIRE(std::isfinite(c.a[i]));
    }
  }
}

TEST_CASE("symmetric families have a zero diagonal") {
  for (const auto& spec : {FamilySpec::chebyshev1(), FamilySpec::chebyshev2(), FamilySpec::pollaczek(1.2, 8.9),
                           FamilySpec::pollaczek(0.5, 0.0), FamilySpec::jacobi(0.7, 0.7), FamilySpec::jacobi(0.0, 0.0),
                           FamilySpec::jacobi(-0.4, -0.4)}) {
    CAPTURE(spec.describe());
    CHECK(spec.symmetric());
    for (double a : recurrence_coefficients(spec, 300).a) REQUIRE(a == 0.0);
  }
  CHECK_FALSE(FamilySpec::jacobi(1.2, 8.9).symmetric());
  CHECK_FALSE(FamilySpec::meixner(3.4, 0.2).symmetric());
}

TEST_CASE("Jacobi specialisations") {
  // alpha = beta = 1/2 is the second Chebyshev kind; 0 is Legendre. The first
  // kind sits on the excluded boundary alpha + beta = -1, approached here.
  CHECK_THROWS_AS(FamilySpec::jacobi(-0.5, -0.5), std::invalid_argument);
  const auto first = recurrence_coefficients(FamilySpec::jacobi(-0.5 + 1e-9, -0.5 + 1e-9), 40);
  const auto second = recurrence_coefficients(FamilySpec::jacobi(0.5, 0.5), 40);
  const auto legendre = recurrence_coefficients(FamilySpec::jacobi(0.0, 0.0), 40);
  const auto t = recurrence_coefficients(FamilySpec::chebyshev1(), 40);
  for (int i = 0; i < 40; ++i) {
    CHECK(first.b[i] == doctest::Approx(t.b[i]).epsilon(1e-8));
    CHECK(second.b[i] == doctest::Approx(0.5).epsilon(1e-14));
    const double k = i + 1;
    CHECK(legendre.b[i] == doctest::Approx(k / std::sqrt(4 * k * k - 1)).epsilon(1e-14));
  }
}

TEST_CASE("Jacobi recurrence is orthonormal for (1 + x)^alpha (1 - x)^beta") {
  for (auto [alpha, beta] : {std::pair{1.2, 8.9}, std::pair{1.2, 3.4}, std::pair{-0.3, 0.6}, std::pair{2.0, -0.5}}) {
    CAPTURE(alpha);
    CAPTURE(beta);
    const int count = 8;
    const auto moments = oracle::beta_moments_x(alpha, beta, 2 * count);
    // Expanding in monomials amplifies coefficient rounding to ~1e-9; a wrong
    // formula or swapped weight exponents shows up at order one.
    CHECK(static_cast<double>(gram_error(FamilySpec::jacobi(alpha, beta), count, moments)) < 1e-8);
    CHECK(static_cast<double>(gram_error(FamilySpec::jacobi(beta, alpha), count, moments)) > 1e-3);
  }
}

TEST_CASE("Pollaczek with a = 0 reduces to Gegenbauer") {
  // Gegenbauer C^theta is Jacobi with alpha = beta = theta - 1/2.
  for (double theta : {0.6, 1.2, 3.0}) {
    const auto p = recurrence_coefficients(FamilySpec::pollaczek(theta, 0.0), 60);
    const auto g = recurrence_coefficients(FamilySpec::jacobi(theta - 0.5, theta - 0.5), 60);
    for (int i = 0; i < 60; ++i) CHECK(p.b[i] == doctest::Approx(g.b[i]).epsilon(1e-13));
  }
}

TEST_CASE("Meixner recurrence is orthonormal for the negative binomial weight") {
  for (auto [beta, c] : {std::pair{3.4, 0.2}, std::pair{8.9, 0.2}, std::pair{3.4, 0.8}, std::pair{0.7, 0.5}}) {
    CAPTURE(beta);
    CAPTURE(c);
    const int count = 7;
    // w(k) = (1 - c)^beta (beta)_k c^k / k!, summed until negligible.
    std::vector<oracle::ld> moments(2 * count, 0);
    oracle::ld w = std::pow(1.0L - c, static_cast<oracle::ld>(beta));
    for (int k = 0; k < 4000; ++k) {
      oracle::ld power = 1;
      for (auto& m : moments) {
        m += w * power;
        power *= k;
      }
      w *= (beta + k) * c / (k + 1);
    }
    CHECK(static_cast<double>(gram_error(FamilySpec::meixner(beta, c), count, moments)) < 1e-11);
  }
}

TEST_CASE("parameter domains") {
  CHECK_THROWS_AS(FamilySpec::jacobi(-1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::jacobi(0.5, -1.2), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::jacobi(-0.6, -0.6), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::pollaczek(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::pollaczek(1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::meixner(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::meixner(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::meixner(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::jacobi(std::nan(""), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(recurrence_coefficients(FamilySpec::chebyshev1(), 0), std::invalid_argument);
}

TEST_CASE("names and accessors") {
  CHECK(parse_family_kind("meixner") == FamilyKind::meixner);
  CHECK_THROWS_AS(parse_family_kind("hermite"), std::invalid_argument);
  for (auto kind : {FamilyKind::chebyshev1, FamilyKind::chebyshev2, FamilyKind::jacobi, FamilyKind::pollaczek,
                    FamilyKind::meixner}) {
    CHECK(parse_family_kind(to_string(kind)) == kind);
  }
  const auto m = FamilySpec::meixner(3.4, 0.2);
  CHECK(m.beta() == 3.4);
  CHECK(m.c() == 0.2);
  const auto j = FamilySpec::jacobi(1.2, 8.9);
  CHECK(j.alpha() == 1.2);
  CHECK(j.beta() == 8.9);
  CHECK(j.describe() == "jacobi(alpha=1.2,beta=8.9)");
  CHECK(FamilySpec::pollaczek(1.2, 3.4) == FamilySpec::pollaczek(1.2, 3.4));
  CHECK_FALSE(FamilySpec::pollaczek(1.2, 3.4) == FamilySpec::pollaczek(1.2, 8.9));
}
