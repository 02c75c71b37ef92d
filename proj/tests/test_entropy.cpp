#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "oracles.hpp"
#include "orthoentropy/entropy.hpp"
#include "orthoentropy/numthy.hpp"
#include "orthoentropy/specfun.hpp"

using namespace orthoentropy;
using entropy::ProbabilityVector;
using families::FamilySpec;

namespace {

std::vector<FamilySpec> all_families() {
  return {FamilySpec::chebyshev1(),        FamilySpec::chebyshev2(),        FamilySpec::jacobi(1.2, 8.9),
          FamilySpec::jacobi(1.2, 3.4),    FamilySpec::pollaczek(1.2, 8.9), FamilySpec::pollaczek(1.2, 3.4),
          FamilySpec::meixner(3.4, 0.2),   FamilySpec::meixner(8.9, 0.2),   FamilySpec::meixner(3.4, 0.8),
          FamilySpec::meixner(8.9, 0.8)};
}

}  // namespace

TEST_CASE("Shannon entropy examples") {
  CHECK(entropy::shannon_entropy(ProbabilityVector({1.0, 0.0, 0.0, 0.0})) == 0.0);
  for (int n : {1, 2, 7, 100}) {
    CHECK(entropy::shannon_entropy(ProbabilityVector(std::vector<double>(n, 1.0 / n))) ==
          doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-14));
  }
  CHECK(entropy::shannon_entropy(ProbabilityVector({0.5, 0.25, 0.25})) ==
        doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-15));
  CHECK(entropy::xlogx(0.0) == 0.0);
  CHECK(entropy::xlogx(1e-310) == 0.0);
}

TEST_CASE("probability vector validation") {
  CHECK_THROWS_AS(ProbabilityVector({}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector({1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector({std::nan(""), 1.0}), std::invalid_argument);
  CHECK_NOTHROW(ProbabilityVector({0.5, 0.5 + 1e-13}));
  const double h = std::sqrt(0.5);
  const auto p = ProbabilityVector::from_unit_vector(std::vector<double>{h, -h});
  CHECK(p.values()[1] == doctest::Approx(0.5));
}

TEST_CASE("entropy at zeros: examples") {
  const auto d1 = spectrum::decompose(FamilySpec::chebyshev1(), 1);
  CHECK(entropy::entropy_at_zero(d1, 1) == 0.0);
  const auto d3 = spectrum::decompose(FamilySpec::chebyshev2(), 3);
  CHECK(entropy::entropy_at_zero(d3, 2) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(entropy::entropy_at_zero(d3, 0), std::out_of_range);
  CHECK_THROWS_AS(entropy::entropy_at_zero(d3, 4), std::out_of_range);
}

TEST_CASE("spectral entropies of Chebyshev families match the trigonometric oracle") {
  for (int kind : {1, 2}) {
    const auto spec = kind == 1 ? FamilySpec::chebyshev1() : FamilySpec::chebyshev2();
    for (int n : {1, 2, 3, 12, 45, 150}) {
      const auto d = spectrum::decompose(spec, n);
      double worst = 0.0;
      for (int k = 1; k <= n; ++k) {
        const int j = static_cast<int>(entropy::theorem_index(k, n));
        worst = std::max(worst, std::abs(entropy::entropy_at_zero(d, k) -
                                         static_cast<double>(oracle::chebyshev_entropy(kind, n, j))));
      }
      CAPTURE(kind);
      CAPTURE(n);
      CHECK(worst <= 1e-11);
    }
  }
}

TEST_CASE("generalised entropy: examples") {
  for (const auto& spec : all_families()) CHECK(entropy::entropy_at_lambda(spec, 1, 0.3) == 0.0);
  CHECK(entropy::entropy_at_lambda(FamilySpec::chebyshev1(), 2, 1.0) ==
        doctest::Approx(std::log(3.0) - 2.0 / 3.0 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("generalised entropy coincides with the column entropy at zeros") {
  for (const auto& spec : {FamilySpec::chebyshev1(), FamilySpec::chebyshev2(), FamilySpec::jacobi(1.2, 3.4),
                           FamilySpec::pollaczek(1.2, 8.9), FamilySpec::meixner(8.9, 0.8)}) {
    for (int n : {4, 25, 80}) {
      const auto d = spectrum::decompose(spec, n);
      for (int k = 1; k <= n; ++k) {
        CAPTURE(spec.describe());
        REQUIRE(std::abs(entropy::entropy_at_lambda(spec, n, d.zeros[k - 1]) - entropy::entropy_at_zero(d, k)) <=
                1e-10);
      }
    }
  }
}

TEST_CASE("split form -log l - l sum p^2 log p^2 equals the column entropy") {
  for (const auto& spec : all_families()) {
    const auto d = spectrum::decompose(spec, 64);
    for (std::size_t j = 0; j < d.n; ++j) {
      const double ell = d.christoffel[j];
      double s = -std::log(ell);
      for (std::size_t i = 0; i < d.n; ++i) {
        const double u = d.psi(i, j);
        const double p2 = u * u / ell;
        if (u * u > entropy::kZeroProbability) s -= ell * p2 * std::log(p2);
      }
      CAPTURE(spec.describe());
      REQUIRE(std::abs(s - entropy::entropy_at_zero(d, j + 1)) <= 1e-10);
    }
  }
}

TEST_CASE("dual entropy: examples") {
  for (int n : {1, 5, 33}) {
    const auto d = spectrum::decompose(FamilySpec::chebyshev1(), n);
    CHECK(entropy::dual_entropy(d, 1) == doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-12));
  }
  // 2 x 2 second kind: zeros -1/2, 1/2; p = (1, 2 lambda); l = 1/2 at both.
  const auto d = spectrum::decompose(FamilySpec::chebyshev2(), 2);
  const double row2[] = {std::sqrt(0.5) * -1.0, std::sqrt(0.5) * 1.0};
  const double expected = -2 * (row2[0] * row2[0]) * std::log(row2[0] * row2[0]);
  CHECK(entropy::dual_entropy(d, 2) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(entropy::dual_entropy(d, 3), std::out_of_range);
}

TEST_CASE("Jensen bounds for column and row entropies") {
  for (const auto& spec : all_families()) {
    for (int n : {1, 2, 17, 150, 151, 152}) {
      const auto t = entropy::entropy_table(spec, n, true);
      const double cap = std::log(static_cast<double>(n)) + 1e-12;
      for (double v : t.values) {
        REQUIRE(v >= 0.0);
        REQUIRE(v <= cap);
      }
      for (double v : *t.dual_values) {
        REQUIRE(v >= 0.0);
        REQUIRE(v <= cap);
      }
    }
  }
}

TEST_CASE("symmetric families give mirror-symmetric entropies") {
  for (const auto& spec : {FamilySpec::chebyshev1(), FamilySpec::chebyshev2(), FamilySpec::pollaczek(1.2, 8.9),
                           FamilySpec::pollaczek(1.2, 3.4), FamilySpec::jacobi(2.5, 2.5)}) {
    for (int n : {9, 150, 151}) {
      const auto t = entropy::entropy_table(spec, n);
      for (int k = 0; k < n; ++k) {
        REQUIRE(std::abs(t.zeros[k] + t.zeros[n - 1 - k]) <= 1e-12);
        REQUIRE(std::abs(t.values[k] - t.values[n - 1 - k]) <= 1e-10);
      }
    }
  }
}

TEST_CASE("entropy table layout") {
  const auto t = entropy::entropy_table(FamilySpec::meixner(3.4, 0.2), 12);
  CHECK(t.n == 12);
  CHECK(t.values.size() == 12);
  CHECK(t.zeros.size() == 12);
  CHECK(t.christoffel.size() == 12);
  CHECK_FALSE(t.dual_values.has_value());
  CHECK(t.method == entropy::Method::spectral);
  CHECK(std::string(entropy::to_string(t.method)) == "spectral");
  CHECK(t.family == FamilySpec::meixner(3.4, 0.2));
}

TEST_CASE("modified entropies: examples and symmetry") {
  for (int n = 1; n <= 61; n += 2) CHECK(std::abs(entropy::modified_entropy_cheb1(n, (n + 1) / 2)) <= 1e-12);
  for (int n = 2; n <= 60; n += 2) CHECK(std::abs(entropy::modified_entropy_cheb2(n, n / 2)) <= 1e-12);
  for (int n = 2; n <= 40; ++n) {
    for (int j = 1; j <= n; ++j) {
      REQUIRE(entropy::modified_entropy_cheb1(n, j) ==
              doctest::Approx(entropy::modified_entropy_cheb1(n, n - j + 1)).epsilon(1e-12));
    }
    for (int j = 1; j < n; ++j) {
      REQUIRE(entropy::modified_entropy_cheb2(n, j) ==
              doctest::Approx(entropy::modified_entropy_cheb2(n, n - j)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(entropy::modified_entropy_cheb1(4, 5), std::out_of_range);
  CHECK_THROWS_AS(entropy::modified_entropy_cheb1(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(entropy::modified_entropy_cheb2(4, 4), std::out_of_range);
  CHECK_THROWS_AS(entropy::modified_entropy_cheb2(1, 1), std::invalid_argument);
}

TEST_CASE("modified entropies equal their R-series closed forms") {
  const specfun::RFunctionEvaluator r;
  const double base = 1.0 - 2.0 * std::log(2.0);
  for (int n = 1; n <= 150; ++n) {
    for (int j = 1; j <= n; ++j) {
      const double d = static_cast<double>(numthy::gcd(2 * j - 1, n));
      REQUIRE(std::abs(2.0 / n * entropy::modified_entropy_cheb1(n, j) - (base - r(d / (2.0 * n)))) <= 1e-10);
      if (n >= 2 && j < n) {
        const double d2 = static_cast<double>(numthy::gcd(j, n));
        REQUIRE(std::abs(2.0 / n * entropy::modified_entropy_cheb2(n, j) - (base - r(d2 / n))) <= 1e-10);
      }
    }
  }
}

TEST_CASE("spectral entropies reduce to the modified entropies") {
  for (int n : {1, 2, 7, 30, 64, 151}) {
    const auto t1 = entropy::entropy_table(FamilySpec::chebyshev1(), n);
    const auto t2 = entropy::entropy_table(FamilySpec::chebyshev2(), n);
    for (int k = 1; k <= n; ++k) {
      const int j = static_cast<int>(entropy::theorem_index(k, n));
      const double first = std::log(n / 2.0) + std::log(2.0) / n - 2.0 / n * entropy::modified_entropy_cheb1(n, j);
      const double second = std::log((n + 1) / 2.0) - 2.0 / (n + 1) * entropy::modified_entropy_cheb2(n + 1, j);
      REQUIRE(std::abs(t1.values[k - 1] - first) <= 1e-10);
      REQUIRE(std::abs(t2.values[k - 1] - second) <= 1e-10);
    }
  }
}

TEST_CASE("cosine and sine folding identities, n <= 100") {
  double worst = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const double h = std::numbers::pi / (2.0 * n);
    for (int j = 1; j <= n; ++j) {
      const numthy::PhiFunction odd(n, 2 * j - 1);
      const numthy::PhiFunction even(n, 2 * j);
      for (int k = -2 * n; k <= 2 * n; ++k) {
        const double c_lhs = std::abs(std::cos((2 * j - 1) * h * k));
        const double c_rhs = std::abs(std::cos(h * static_cast<double>(numthy::phi_at_integer(odd, k))));
        const double s_lhs = std::abs(std::sin(j * std::numbers::pi / n * k));
        const double s_rhs = std::abs(std::sin(h * static_cast<double>(numthy::phi_at_integer(even, k))));
        worst = std::max({worst, std::abs(c_lhs - c_rhs), std::abs(s_lhs - s_rhs)});
      }
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("theorem index adapter") {
  CHECK(entropy::theorem_index(1, 5) == 5);
  CHECK(entropy::theorem_index(5, 5) == 1);
  CHECK_THROWS_AS(entropy::theorem_index(0, 5), std::out_of_range);
  CHECK_THROWS_AS(entropy::theorem_index(6, 5), std::out_of_range);
}
