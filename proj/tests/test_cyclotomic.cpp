#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "prymcheck/cyclotomic.hpp"

using namespace prymcheck;

namespace {
const std::complex<double> kZ{0.5, std::sqrt(3.0) / 2};

CycZ6 random_cyc(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-50, 50);
  return {BigInt(d(rng)), BigInt(d(rng))};
}
}  // namespace

TEST_CASE("worked products") {
  CHECK(CycZ6::zeta() * CycZ6::zeta() == CycZ6(BigInt(-1), BigInt(1)));
  CHECK(conj(CycZ6::zeta()) == CycZ6(BigInt(1), BigInt(-1)));
  const auto e = embed(CycZ6(BigInt(2), BigInt(2)));
  CHECK(e.real() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(e.imag() == doctest::Approx(1.7320508075688772).epsilon(1e-12));
  CHECK(norm(CycZ6(BigInt(2), BigInt(2))) == 12);
}

TEST_CASE("root_of_unity has period 6 and matches z^k") {
  CycZ6 p(1);
  for (int k = 0; k < 18; ++k) {
    CHECK(root_of_unity(k) == p);
    CHECK(root_of_unity(-k) * p == CycZ6(1));
    CHECK(root_exponent(p) == k % 6);
    p *= CycZ6::zeta();
  }
  CHECK(root_exponent(CycZ6(2)) == -1);
  CHECK(root_exponent(CycZ6(BigInt(1), BigInt(1))) == -1);
}

TEST_CASE("from_root_counts agrees with a sum of powers") {
  std::array<long long, 6> c{3, -1, 4, 1, -5, 9};
  CycZ6 want(0);
  for (int k = 0; k < 6; ++k) want += CycZ6(c[k]) * root_of_unity(k);
  CHECK(from_root_counts(c) == want);
}

TEST_CASE("ring laws and embedding are compatible (random)") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_cyc(rng), y = random_cyc(rng), w = random_cyc(rng);
    CHECK(x * (y + w) == x * y + x * w);
    CHECK(x * y == y * x);
    CHECK(conj(conj(x)) == x);
    CHECK(conj(x * y) == conj(x) * conj(y));
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(x * conj(x) == CycZ6(norm(x), BigInt(0)));
    // Complex oracle: a + b e^{i pi/3}.
    const auto ex = std::complex<double>(double(x.a)) + double(x.b) * kZ;
    const auto ey = std::complex<double>(double(y.a)) + double(y.b) * kZ;
    CHECK(std::abs(embed(x * y) - ex * ey) < 1e-9);
  }
}

TEST_CASE("string round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_cyc(rng);
    CHECK(parse_cyc(to_string(x)) == x);
  }
  CHECK(parse_cyc("17") == CycZ6(17));
  CHECK_THROWS(parse_cyc("abc"));
}

TEST_CASE("CycQ6 field operations") {
  const CycQ6 x(CycZ6(BigInt(3), BigInt(1)));
  const CycQ6 y(CycZ6(BigInt(-2), BigInt(5)), BigInt(7));
  CHECK((x / y) * y == x);
  CHECK(x / x == CycQ6(CycZ6(1)));
  CHECK_FALSE(y.is_integral());
  CHECK(CycQ6(CycZ6(BigInt(4), BigInt(6)), BigInt(2)) == CycQ6(CycZ6(BigInt(2), BigInt(3))));
  CHECK_THROWS_AS(x / CycQ6(), std::domain_error);
  const auto e = (x / y).embed();
  CHECK(std::abs(e - embed(x.num()) / (embed(y.num()) / 7.0)) < 1e-12);
}
