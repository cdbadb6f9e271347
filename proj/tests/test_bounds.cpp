#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "prymcheck/bounds.hpp"

using namespace prymcheck;

TEST_CASE("kappa for an elliptic curve over Q with h = 1") {
  const auto k = kappa_log(1, 1, 1.0);
  CHECK(k.level() == 0);
  const double want = 65536 * std::log10(14.0);
  CHECK(std::abs(static_cast<double>(k.log10()) - want) < 1e-6);
  CHECK(static_cast<double>(k.log10()) == doctest::Approx(75112.6).epsilon(1e-6));
  CHECK(static_cast<double>(k.ln()) == doctest::Approx(want * std::numbers::ln10).epsilon(1e-12));
}

TEST_CASE("kappa is monotone in g, degK and h") {
  for (int g = 1; g < 5; ++g) CHECK(kappa_log(g, 1, 1) < kappa_log(g + 1, 1, 1));
  for (long long d : {1LL, 2LL, 10LL, 1000LL}) CHECK(kappa_log(2, d, 1) < kappa_log(2, d + 1, 1));
  CHECK(kappa_log(2, 3, 5.0) < kappa_log(2, 3, 6.0));
  // h below max(ln degK, 1) does not move it.
  CHECK(kappa_log(2, 3, 0.2) == kappa_log(2, 3, 0.9));
}

TEST_CASE("Bost lower bound") {
  const double b1 = -std::log(2 * std::numbers::pi * std::numbers::pi) / 2;
  CHECK(std::abs(bost_lower(1) - b1) < 1e-12);
  CHECK(bost_lower(1) == doctest::Approx(-1.49129).epsilon(1e-5));
  CHECK(bost_lower(2) == doctest::Approx(2 * bost_lower(1)).epsilon(1e-15));
}

TEST_CASE("isogeny-factor bound against a plain double formula") {
  for (auto [g, d, h, dim] : {std::tuple{1, 1LL, 1.0, 1}, {2, 1LL, 3.5, 1}, {3, 4LL, 0.5, 2}}) {
    const double k10 = 1024.0 * dim * dim * dim *
                       (64.0 * dim * dim * std::log10(14.0 * dim) + std::log10(double(d)) +
                        2 * std::log10(std::max({h, std::log(double(d)), 1.0})));
    const double want = h + 0.5 * k10 * std::numbers::ln10 + std::log(2 * std::numbers::pi * std::numbers::pi) / 2 * dim;
    const double got = static_cast<double>(isogeny_factor_height_bound(g, d, h, dim));
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
    CHECK(static_cast<double>(height_diff_bound(kappa_log(dim, d, h))) ==
          doctest::Approx(0.5 * k10 * std::numbers::ln10).epsilon(1e-12));
  }
}

TEST_CASE("LogScale round trips and arithmetic") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> e(-150, 150);
  for (int i = 0; i < 200; ++i) {
    const double x = std::pow(10.0, e(rng)), y = std::pow(10.0, e(rng));
    const auto X = LogScale::from_double(x), Y = LogScale::from_double(y);
    CHECK(std::abs(X.to_double() / x - 1) < 1e-12);
    CHECK(std::abs((X * Y).to_double() / (x * y) - 1) < 1e-12);
    CHECK(std::abs((X + Y).to_double() / (x + y) - 1) < 1e-12);
    CHECK(std::abs(X.pow(HighReal(0.5)).to_double() / std::sqrt(x) - 1) < 1e-12);
    CHECK((x < y) == (X < Y));
    if (x > 10) {
      const auto P = X.promoted();
      CHECK(P.level() == 1);
      CHECK(compare(P, X) == 0);
      CHECK(std::abs(static_cast<double>(P.value()) - std::log10(std::log10(x))) < 1e-12);
    }
  }
  CHECK_THROWS_AS(LogScale::from_log10(HighReal(400)).to_double(), std::overflow_error);
  CHECK_THROWS_AS(LogScale::from_loglog10(HighReal(3)).log10(), std::domain_error);
  CHECK_THROWS(height_diff_bound(LogScale::from_loglog10(HighReal(3))));
}

TEST_CASE("Stirling log-factorial against lgamma") {
  for (double n : {10.0, 57.0, 1000.0, 123456.0, 1e8}) {
    HighReal err;
    const double got = static_cast<double>(log10_factorial(HighReal(n), &err));
    const double want = std::lgamma(n + 1) / std::numbers::ln10;
    CHECK(std::abs(got - want) <= static_cast<double>(err) + 1e-13 * want);
    CHECK(static_cast<double>(err) <= 1.0 / (360 * n * n * n) + 1e-300);
  }
}

TEST_CASE("product constant with and without primes") {
  const auto empty = snowden_constant_log(1, {});
  CHECK(empty.value.level() == 0);
  CHECK(static_cast<double>(empty.value.log10()) == doctest::Approx(9.566e10).epsilon(1e-3));
  const auto s = snowden_constant_log(1, {2});
  CHECK(s.value.level() == 1);
  // log10 log10 N is dominated by log10((10^10)!) + log10(log10 2).
  const double want = static_cast<double>(s.log10_exponent_factorial) + std::log10(std::log10(2.0));
  CHECK(static_cast<double>(s.value.value()) == doctest::Approx(want).epsilon(1e-12));
  CHECK(snowden_constant_log(1, {2}).value < snowden_constant_log(1, {2, 3}).value);
}
