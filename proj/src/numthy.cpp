#include "orthoentropy/numthy.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orthoentropy::numthy {

namespace {

__extension__ typedef __int128 Wide;

Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw std::overflow_error("numthy: intermediate value exceeds 64 bits");
  }
  return static_cast<Int>(v);
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

Int centred_mod(Wide p, Int q) {
  Wide r = p % q;
  if (r < 0) r += q;
  if (2 * r >= q) r -= q;
  return static_cast<Int>(r);
}

}  // namespace

Int gcd(Int a, Int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("gcd: arguments must be positive");
  return std::gcd(a, b);
}

Int shifted_remainder(Int p, Int q) {
  if (p < 0) throw std::invalid_argument("shifted_remainder: p must be nonnegative");
  if (q < 1) throw std::invalid_argument("shifted_remainder: q must be positive");
  return centred_mod(p, q);
}

Rational::Rational(Int numerator, Int denominator) {
  if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
  Wide n = numerator;
  Wide d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const Int g = std::gcd(narrow(abs_wide(n)), narrow(d));
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

namespace {

Rational make(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = abs_wide(num);
  Wide b = den;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a) { return make(-Wide(a.num_), a.den_); }

bool operator<(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r.num();
  if (r.den() != 1) out << '/' << r.den();
  return out.str();
}

PhiFunction::PhiFunction(Int n, Int j) : n_(n), j_(j) {
  if (n < 1 || j < 1) throw std::invalid_argument("PhiFunction: n and j must be positive");
}

Int phi_at_integer(const PhiFunction& f, Int k) {
  const Wide jk = Wide(f.j()) * abs_wide(k);
  const Int r = centred_mod(jk, 2 * f.n());
  return r < 0 ? -r : r;
}

Rational phi_at_real(const PhiFunction& f, const Rational& x) {
  const Wide p = x.num();
  const Wide q = x.den();
  const Wide n = f.n();
  const Wide j = f.j();
  // x in [(2m-1) n / j, (2m+1) n / j]  <=>  m = floor((j x + n) / (2n))
  const Wide m = floor_div(j * p + n * q, 2 * n * q);
  return make(abs_wide(j * p - 2 * m * n * q), q);
}

bool MainLemmaReport::passed() const noexcept {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

std::string MainLemmaReport::first_failure() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return v.clause + ": " + v.detail;
  }
  return {};
}

namespace {

ClauseVerdict check_image(const MainLemmaReport& report, Int step, Int count, Int expected_multiplicity,
                          const std::string& clause) {
  ClauseVerdict verdict{clause, true, {}};
  std::set<Int> expected;
  for (Int m = 1; m <= count; ++m) expected.insert(step * m);
  if (expected != report.image_values) {
    verdict.pass = false;
    verdict.detail = "image differs from the multiples of " + std::to_string(step);
    return verdict;
  }
  for (const auto& [value, hits] : report.multiplicity_map) {
    if (hits != expected_multiplicity) {
      verdict.pass = false;
      verdict.detail = "value " + std::to_string(value) + " hit " + std::to_string(hits) +
                       " times, expected " + std::to_string(expected_multiplicity);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

MainLemmaReport verify_main_lemma(Int n, Int j) {
  const PhiFunction phi(n, j);
  MainLemmaReport report;
  report.n = n;
  report.j = j;
  report.d = gcd(j, n);
  report.d2 = gcd(j, 2 * n);
  const Int d = report.d;

  for (Int k = 1; k < n; ++k) {
    const Int v = phi_at_integer(phi, k);
    if (v != 0 && v != n) {
      report.image_values.insert(v);
      ++report.multiplicity_map[v];
    }
  }

  {
    ClauseVerdict shift{"(i) shift", true, {}};
    const bool odd = (j / d) % 2 == 1;
    for (Int k = 0; k <= 2 * n && shift.pass; ++k) {
      const Int lhs = phi_at_integer(phi, k + n / d);
      const Int base = phi_at_integer(phi, k);
      const Int rhs = odd ? n - base : base;
      if (lhs != rhs) {
        shift.pass = false;
        shift.detail = "fails at k = " + std::to_string(k);
      }
    }
    report.verdicts.push_back(std::move(shift));
  }
  {
    ClauseVerdict scaling{"(i) scaling", true, {}};
    const PhiFunction reduced(n / d, j / d);
    for (Int k = 0; k <= 2 * n && scaling.pass; ++k) {
      if (phi_at_integer(phi, k) != d * phi_at_integer(reduced, k)) {
        scaling.pass = false;
        scaling.detail = "fails at k = " + std::to_string(k);
      }
    }
    report.verdicts.push_back(std::move(scaling));
  }

  if (d == n) {
    ClauseVerdict boundary{"(ii)", true, {}};
    for (Int k = -2 * n; k <= 2 * n && boundary.pass; ++k) {
      const Int v = phi_at_integer(phi, k);
      if (v != 0 && v != n) {
        boundary.pass = false;
        boundary.detail = "phi(" + std::to_string(k) + ") = " + std::to_string(v);
      }
    }
    report.verdicts.push_back(std::move(boundary));
  } else if (report.d2 == d) {
    report.verdicts.push_back(check_image(report, d, n / d - 1, d, "(iii)"));
  } else if (report.d2 == 2 * d) {
    report.verdicts.push_back(check_image(report, 2 * d, (n - d) / (2 * d), 2 * d, "(iv)"));
  } else {
    report.verdicts.push_back({"divisibility", false, "GCD(j, 2n) is neither d nor 2d"});
  }

  Int total = 0;
  for (const auto& [value, hits] : report.multiplicity_map) total += hits;
  Int off_boundary = 0;
  for (Int k = 1; k < n; ++k) {
    const Int v = phi_at_integer(phi, k);
    if (v != 0 && v != n) ++off_boundary;
  }
  report.verdicts.push_back({"multiplicity total", total == off_boundary,
                             total == off_boundary ? std::string{} : "counts do not sum to the off-boundary total"});
  return report;
}

}  // namespace orthoentropy::numthy
