#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "doctest.h"
#include "prymcheck/periods.hpp"

using namespace prymcheck;

namespace {

cd z6(int k) { return std::polar(1.0, std::numbers::pi * k / 3); }

// int_0^1 t^(p-1) (1-t)^(r-1) (1 - lambda t)^(-s) dt by tanh-sinh.
cd euler(double p, double r, double s, cd lambda) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto f = [&](double t, double xc, bool im) {
    const double u = xc < 0 ? -xc : t;
    const double w = xc > 0 ? xc : 1 - t;
    if (u <= 0 || w <= 0) return 0.0;
    const cd v = std::pow(u, p - 1) * std::pow(w, r - 1) * std::pow(1.0 - lambda * u, -s);
    return im ? v.imag() : v.real();
  };
  return {ts.integrate([&](double t, double xc) { return f(t, xc, false); }, 0.0, 1.0),
          ts.integrate([&](double t, double xc) { return f(t, xc, true); }, 0.0, 1.0)};
}

std::vector<cd> sample_X() {
  std::vector<cd> xs;
  for (int i = 1; i <= 10; ++i) xs.emplace_back(0.085 * i - 0.035, 0);
  return xs;
}

}  // namespace

TEST_CASE("mu and nu against Euler integrals") {
  const cd m23 = std::polar(1.0, -2 * std::numbers::pi / 3);
  const cd m43 = std::polar(1.0, -4 * std::numbers::pi / 3);
  for (cd lam : {cd(0.3, 0), cd(-0.5, 0), cd(0.2, 0.4), cd(0.7, -0.2)}) {
    for (int t = 0; t < 6; t += 5) {
      const auto pp = period_vectors(lam, t);
      const cd L = z6(t) * std::pow(lam, 1.0 / 6);
      const cd mu1 = 2.0 * (1.0 - z6(4)) * euler(1.0 / 3, 0.5, 1.0 / 6, lam);
      const cd mu5 = 2.0 * (1.0 - z6(2)) * euler(2.0 / 3, 0.5, 5.0 / 6, lam);
      const cd nu1 = (1.0 - z6(1)) * (1.0 - z6(2)) * m23 * L * euler(1.0 / 3, 5.0 / 6, 0.5, lam);
      const cd nu5 = (1.0 - z6(5)) * (1.0 - z6(4)) * m43 / L * euler(2.0 / 3, 1.0 / 6, 0.5, lam);
      CAPTURE(lam);
      CHECK(std::abs(pp.mu.v[0] - mu1) < 1e-9 * std::abs(mu1));
      CHECK(std::abs(pp.mu.v[2] - mu5) < 1e-9 * std::abs(mu5));
      CHECK(std::abs(pp.nu.v[0] - nu1) < 1e-9 * std::abs(nu1));
      CHECK(std::abs(pp.nu.v[2] - nu5) < 1e-9 * std::abs(nu5));
      CHECK(pp.mu.v[1] == cd(0, 0));
    }
  }
  CHECK_THROWS(period_vectors(cd(0, 0), 0));
}

TEST_CASE("exact diagonal relations and the Beta identity") {
  CHECK(check_diagonal_relations().ok());
  CHECK(std::abs(beta_identity_value() - cd(2, 0)) < 1e-12);
  CHECK(std::abs(beta_identity_value(Precision::Quad) - cd(2, 0)) < 1e-15);
}

TEST_CASE("C_1 points and sixth-root branches") {
  for (auto X : sample_X()) {
    const auto P = c1_point(X);
    CHECK(c1_residual(P) < 1e-14);
    const cd lam = std::pow(X, 6);
    for (int t = 0; t < 6; ++t) CHECK(sixth_root_branch(lam, z6(t) * X) == t);
  }
  CHECK(c1_residual(c1_point(cd(0.4, 0.3), 2)) < 1e-14);
}

TEST_CASE("lattices and the quaternionic matrix at ten points") {
  for (auto X : sample_X()) {
    CAPTURE(X);
    const auto P = c1_point(X);
    const auto pp = period_vectors_at(P);
    const auto L = lattice_build(pp);
    CHECK(L.rank == 6);
    CHECK(L.relations_ok);
    const auto PL = project_lattice(pp);
    CHECK(PL.rank == 4);
    // The generators have unit coordinates in their own basis.
    for (int i = 0; i < 4; ++i) {
      const auto m = projected_coordinates(PL, PL.gens[static_cast<std::size_t>(i)]);
      CHECK(m.integral(1e-9));
      CHECK(m.coefficients(i) == doctest::Approx(1.0).epsilon(1e-9));
    }
    const auto M = qm_matrix(P, kQmBranch);
    const auto r = check_qm_stabilizes(PL, M);
    CHECK(r.ok());
    CHECK(r.max_pattern_error < 1e-7);
    CHECK(r.m_squared_error < 1e-10);
    // M^2 = 2 directly from the entries.
    CHECK(std::abs(M.m12 * M.m21 - 2.0) < 1e-10);
    CHECK(check_quaternion_relations(P, kQmBranch).ok(1e-10));
  }
}

TEST_CASE("t' calibration is unique at X = 1/2") {
  const auto c = calibrate_t_prime(c1_point(cd(0.5, 0)));
  REQUIRE(c.t_prime.has_value());
  CHECK(*c.t_prime == kQmBranch);
  int matches = 0;
  for (int t = 0; t < 6; ++t) matches += c.stabilizes[static_cast<std::size_t>(t)] && c.pattern_error[static_cast<std::size_t>(t)] < 1e-7;
  CHECK(matches == 1);
}

TEST_CASE("Hilbert symbols: product formula and the discriminant") {
  CHECK(quaternion_discriminant(-3, 2) == 6);
  CHECK(quaternion_discriminant(-1, -1) == 2);
  CHECK(quaternion_discriminant(-1, -3) == 3);
  CHECK(quaternion_discriminant(1, 7) == 1);
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
  CHECK(hilbert_symbol(2, -1, 0) == 1);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> d(-60, 60);
  const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
  for (int i = 0; i < 300; ++i) {
    const long long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    int prod = hilbert_symbol(a, b, 0);
    for (long long p : primes) prod *= hilbert_symbol(a, b, p);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(prod == 1);
    CHECK(hilbert_symbol(a, b, 7) == hilbert_symbol(b, a, 7));
  }
}

TEST_CASE("Schwarz ratios on and off the real line") {
  for (cd lam : {cd(0.3, 0), cd(-0.5, 0), cd(0.2, 0.4), cd(2.5, 0.5)})
    for (int t : {0, 1, 4}) {
      const auto r = check_schwarz_ratios(lam, t);
      CHECK(r.error1 < 1e-10);
      CHECK(r.error5 < 1e-10);
    }
}

TEST_CASE("extension along C_1 stabilizes") {
  const auto rep = check_extension_on_curve();
  CHECK(rep.exponents_in_third_z);
  CHECK(rep.ok());
  for (const auto& s : rep.sequences) {
    CAPTURE(s.name);
    CHECK(s.ok);
    CHECK(s.last_relative_change < 1e-6);
  }
  // The exponent pieces c - a - b of both triples lie in (1/3)Z.
  CHECK((triple_mu1().cab() * 3).denominator() == 1);
  CHECK((triple_mu5().cab() * 3).denominator() == 1);
}
