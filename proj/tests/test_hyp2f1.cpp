#include <cmath>
#include <complex>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "doctest.h"
#include "prymcheck/hyp2f1.hpp"

using namespace prymcheck;
using cplx = std::complex<double>;

namespace {

// Euler integral, valid for Re c > Re b > 0 and z off [1, inf):
//   B(b, c-b) 2F1(a,b;c;z) = int_0^1 t^(b-1) (1-t)^(c-b-1) (1-zt)^(-a) dt.
cplx euler_integral(const HypParams& p, cplx z) {
  const double a = to_real<double>(p.a), b = to_real<double>(p.b), c = to_real<double>(p.c);
  boost::math::quadrature::tanh_sinh<double> ts;
  // xc is the signed distance to the nearer endpoint, which keeps 1 - t exact near 1.
  auto f = [&](double t, double xc, bool imag_part) {
    const double s = xc > 0 ? xc : 1 - t;
    const double u = xc < 0 ? -xc : t;
    if (u <= 0 || s <= 0) return 0.0;
    const cplx v = std::pow(u, b - 1) * std::pow(s, c - b - 1) * std::pow(1.0 - z * u, -a);
    return imag_part ? v.imag() : v.real();
  };
  const double re = ts.integrate([&](double t, double xc) { return f(t, xc, false); }, 0.0, 1.0);
  const double im = ts.integrate([&](double t, double xc) { return f(t, xc, true); }, 0.0, 1.0);
  return cplx(re, im) / beta<double>(p.b, p.c - p.b);
}

const HypParams kMu1(Rat(1, 6), Rat(1, 3), Rat(5, 6));
const HypParams kMu5(Rat(5, 6), Rat(2, 3), Rat(7, 6));

}  // namespace

TEST_CASE("agrees with the Euler integral across every region") {
  const cplx pts[] = {{0.3, 0},  {-0.4, 0.2}, {0.8, 0.1}, {0.95, -0.05}, {-2, 0},  {-7, 3},
                      {3, 0.5},  {2, -1},     {0.5, 0.8}, {1.2, 0.9},    {-0.9, 0.9}, {0.6, -0.7}};
  for (const auto& p : {kMu1, kMu5, HypParams(Rat(1, 2), Rat(1, 4), Rat(3, 2))}) {
    for (auto z : pts) {
      HypMethod used{};
      const auto v = hyp2f1<double>(p, z, HypMethod::Auto, &used);
      CAPTURE(p.to_string());
      CAPTURE(z);
      CAPTURE(method_name(used));
      CHECK(std::abs(v - euler_integral(p, z)) < 1e-8 * std::max(1.0, std::abs(v)));
    }
  }
}

TEST_CASE("methods agree where their regions overlap") {
  for (const auto& p : {kMu1, kMu5}) {
    for (cplx z : {cplx(0.5, 0), cplx(0.45, 0.2), cplx(0.6, -0.1)}) {
      const auto s = hyp2f1<double>(p, z, HypMethod::Series);
      CHECK(std::abs(s - hyp2f1<double>(p, z, HypMethod::Connection)) < 1e-12);
      CHECK(std::abs(s - hyp2f1<double>(p, z, HypMethod::Continuation)) < 1e-11);
    }
    for (cplx z : {cplx(-0.3, 0), cplx(-0.2, 0.3)})
      CHECK(std::abs(hyp2f1<double>(p, z, HypMethod::Series) - hyp2f1<double>(p, z, HypMethod::Pfaff)) < 1e-13);
    for (cplx z : {cplx(-3, 0.5), cplx(2.5, 1)}) {
      const auto inv = hyp2f1<double>(p, z, HypMethod::Inversion);
      CHECK(std::abs(inv - hyp2f1<double>(p, z, HypMethod::Continuation)) < 1e-10 * std::abs(inv));
    }
  }
}

TEST_CASE("quad precision refines double") {
  const cplx z(0.83, 0.21);
  const auto d = hyp2f1<double>(kMu1, z);
  const auto q = to_cd<Quad>(hyp2f1<Quad>(kMu1, from_cd<Quad>(z)));
  CHECK(std::abs(d - q) < 1e-13);
}

TEST_CASE("closed forms") {
  // Terminating: 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1)).
  const HypParams t(Rat(-2), Rat(1, 3), Rat(5, 6));
  const double b = 1.0 / 3, c = 5.0 / 6;
  for (double z : {-3.0, 0.5, 4.0}) {
    const double want = 1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1));
    CHECK(hyp2f1<double>(t, cplx(z, 0)).real() == doctest::Approx(want).epsilon(1e-13));
  }
  // 2F1(1,1;2;z) = -log(1-z)/z.
  const HypParams lg(Rat(1), Rat(1), Rat(2));
  for (cplx z : {cplx(0.4, 0), cplx(-5, 1), cplx(0.9, 0.4)})
    CHECK(std::abs(hyp2f1<double>(lg, z) + std::log(1.0 - z) / z) < 1e-11);
  // Gauss at z -> 1 when c - a - b > 0.
  const HypParams g(Rat(1, 6), Rat(1, 3), Rat(4, 3));
  const double gauss = std::tgamma(4.0 / 3) * std::tgamma(5.0 / 6) / (std::tgamma(7.0 / 6) * std::tgamma(1.0));
  CHECK(hyp2f1<double>(g, cplx(1 - 1e-12, 0)).real() == doctest::Approx(gauss).epsilon(1e-9));
  // With c - a - b integral there is no evaluation path that close to 1.
  CHECK_THROWS_AS(hyp2f1<double>(HypParams(Rat(1, 6), Rat(1, 3), Rat(3, 2)), cplx(1 - 1e-12, 0)), NumericalError);
}

TEST_CASE("Euler transformation F(a,b;c;z) = (1-z)^(c-a-b) F(c-a,c-b;c;z)") {
  for (const auto& p : {kMu1, kMu5, HypParams(Rat(1, 2), Rat(1, 3), Rat(7, 6))})
    for (cplx z : {cplx(0.3, 0), cplx(-0.6, 0.4), cplx(0.5, -0.5)}) {
      const HypParams e(p.c - p.a, p.c - p.b, p.c);
      const cplx rhs = std::pow(1.0 - z, to_real<double>(p.cab())) * hyp2f1<double>(e, z);
      CHECK(std::abs(hyp2f1<double>(p, z) - rhs) < 1e-13);
    }
  // The shifted variant (a-c+1, b-c+1; 2-c) is a different function.
  const HypParams s(kMu1.a - kMu1.c + 1, kMu1.b - kMu1.c + 1, 2 - kMu1.c);
  const cplx z(0.3, 0);
  CHECK(std::abs(hyp2f1<double>(kMu1, z) - std::pow(1.0 - z, 1.0 / 3) * hyp2f1<double>(s, z)) > 1e-3);
}

TEST_CASE("Beta symmetry and Gamma form") {
  for (auto [x, y] : {std::pair{Rat(1, 3), Rat(1, 2)}, {Rat(2, 3), Rat(1, 6)}, {Rat(5, 6), Rat(7, 6)}}) {
    CHECK(beta<double>(x, y) == doctest::Approx(beta<double>(y, x)).epsilon(1e-15));
    const double g = gamma<double>(x) * gamma<double>(y) / gamma<double>(x + y);
    CHECK(beta<double>(x, y) == doctest::Approx(g).epsilon(1e-13));
  }
  CHECK(rgamma<double>(Rat(-3)) == 0);
  CHECK_THROWS_AS(gamma<double>(Rat(0)), NumericalError);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(HypParams(Rat(1), Rat(1), Rat(-2)), std::invalid_argument);
  CHECK_THROWS_AS(hyp2f1<double>(kMu1, cplx(2, 0)), std::domain_error);
  // Forcing the connection formula with integral c-a-b.
  CHECK_THROWS_AS(hyp2f1<double>(HypParams(Rat(1), Rat(1), Rat(2)), cplx(0.5, 0), HypMethod::Connection),
                  NumericalError);
}

TEST_CASE("Schwarz function behaves like z^(1-c) at the origin") {
  for (double r : {1e-3, 1e-5}) {
    const cplx z(r, r);
    const auto s = schwarz_s<double>(kMu1, z);
    CHECK(std::abs(s / std::pow(z, 1.0 / 6) - 1.0) < 10 * r);
  }
}
