// Gauss hypergeometric function 2F1(a,b;c;z) on the principal branch, with
// exact rational parameters.  Templated on the real type so the same code
// runs at 53 and 113 bits.
#pragma once

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/rational.hpp>

#include "prymcheck/numeric.hpp"

namespace prymcheck {

using Rat = boost::rational<long long>;

struct HypParams {
  Rat a, b, c;
  HypParams(Rat a_, Rat b_, Rat c_) : a(a_), b(b_), c(c_) {
    if (c.denominator() == 1 && c.numerator() <= 0)
      throw std::invalid_argument("2F1 parameter c must not be a non-positive integer");
  }
  Rat cab() const { return c - a - b; }
  std::string to_string() const;
};

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }
inline bool is_nonpositive_integer(const Rat& r) { return is_integer(r) && r.numerator() <= 0; }

inline std::string rat_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}
inline std::string HypParams::to_string() const {
  return "(" + rat_string(a) + "," + rat_string(b) + ";" + rat_string(c) + ")";
}

template <class Real>
Real to_real(const Rat& r) {
  return Real(r.numerator()) / Real(r.denominator());
}

enum class HypMethod { Auto, Series, Connection, Pfaff, Inversion, PfaffInversion, Continuation };

inline const char* method_name(HypMethod m) {
  switch (m) {
    case HypMethod::Auto: return "auto";
    case HypMethod::Series: return "series";
    case HypMethod::Connection: return "connection";
    case HypMethod::Pfaff: return "pfaff";
    case HypMethod::Inversion: return "inversion";
    case HypMethod::PfaffInversion: return "pfaff-inversion";
    case HypMethod::Continuation: return "continuation";
  }
  return "?";
}

/// Regions: series for |z| <= kHypRadius, connection formula for |1-z| <= kHypRadius, etc.
inline constexpr double kHypRadius = 0.7;

/// 1/Gamma(x); zero at the poles.
template <class Real>
Real rgamma(const Rat& x) {
  if (is_nonpositive_integer(x)) return Real(0);
  return 1 / boost::math::tgamma(to_real<Real>(x));
}

template <class Real>
Real gamma(const Rat& x) {
  if (is_nonpositive_integer(x)) throw NumericalError("Gamma pole at " + rat_string(x));
  return boost::math::tgamma(to_real<Real>(x));
}

template <class Real>
Real beta(const Rat& x, const Rat& y) {
  return boost::math::beta(to_real<Real>(x), to_real<Real>(y));
}

namespace detail {

template <class Real>
Real epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

// sum (a)_n (b)_n / ((c)_n n!) z^n; throws if it has not converged by max_terms.
template <class Real>
ComplexT<Real> hyp_series(const HypParams& p, const ComplexT<Real>& z, int max_terms = 20000) {
  using C = ComplexT<Real>;
  using std::abs;
  const Real a = to_real<Real>(p.a), b = to_real<Real>(p.b), c = to_real<Real>(p.c);
  C term(Real(1), Real(0));
  C sum = term;
  const Real eps = epsilon<Real>() / 4;
  int small = 0;
  for (int n = 0; n < max_terms; ++n) {
    const Real k(n);
    const Real num = (a + k) * (b + k);
    if (num == 0) return sum;  // terminating series
    term *= C(num / ((c + k) * (k + 1)), Real(0));
    term *= z;
    sum += term;
    if (abs(term) <= eps * abs(sum)) {
      if (++small >= 3) return sum;
    } else {
      small = 0;
    }
  }
  throw NumericalError("2F1 series did not converge for " + p.to_string());
}

template <class Real>
ComplexT<Real> cpow(const ComplexT<Real>& z, const Rat& e) {
  using C = ComplexT<Real>;
  using std::pow;
  return pow(z, C(to_real<Real>(e), Real(0)));
}

// Taylor stepping of z(1-z)F'' + (c - (a+b+1)z)F' - abF = 0 along the ray
// from 0.5 z/|z| to z.
template <class Real>
ComplexT<Real> hyp_continuation(const HypParams& p, const ComplexT<Real>& z) {
  using C = ComplexT<Real>;
  using std::abs;
  const Real a = to_real<Real>(p.a), b = to_real<Real>(p.b), c = to_real<Real>(p.c);
  const Real r0 = abs(z);
  if (r0 <= Real(0.5)) return hyp_series<Real>(p, z);
  C z0 = z * C(Real(0.5) / r0, Real(0));
  C f = hyp_series<Real>(p, z0);
  C df = C(a * b / c, Real(0)) * hyp_series<Real>(HypParams(p.a + 1, p.b + 1, p.c + 1), z0);
  const Real eps = epsilon<Real>() / 4;
  for (int step = 0; step < 2000; ++step) {
    C rem = z - z0;
    const Real dist = abs(rem);
    if (dist == 0) return f;
    const Real radius = (std::min)(abs(z0), abs(C(Real(1), Real(0)) - z0));
    if (radius < Real(1e-6)) break;
    C h = dist <= radius / 2 ? rem : rem * C(radius / (2 * dist), Real(0));
    const C q0 = z0 * (C(Real(1), Real(0)) - z0);
    const C q1 = C(Real(1), Real(0)) - C(Real(2), Real(0)) * z0;
    const C p0 = C(c, Real(0)) - C(a + b + 1, Real(0)) * z0;
    const Real p1 = -(a + b + 1);
    // f_n scaled by h^n so the recurrence runs in the step variable.
    C g0 = f, g1 = df * h;
    C val = g0 + g1, der = df;
    int small = 0;
    for (int n = 0; n < 4000; ++n) {
      const Real k(n);
      C rhs = (q1 * C((k + 1) * k, Real(0)) + p0 * C(k + 1, Real(0))) * g1 * h +
              C(-(k * (k - 1)) + p1 * k - a * b, Real(0)) * g0 * h * h;
      C g2 = -rhs / (q0 * C((k + 2) * (k + 1), Real(0)));
      val += g2;
      der += g2 * C(k + 2, Real(0)) / h;
      if (abs(g2) <= eps * abs(val)) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
      g0 = g1;
      g1 = g2;
    }
    z0 += h;
    f = val;
    df = der;
  }
  throw NumericalError("2F1 analytic continuation did not converge for " + p.to_string());
}

}  // namespace detail

/// Evaluates 2F1 with a chosen transformation.  Auto picks the first region
/// that applies; forcing a method outside its region usually throws.
template <class Real>
ComplexT<Real> hyp2f1(const HypParams& p, const ComplexT<Real>& z, HypMethod method = HypMethod::Auto,
                      HypMethod* used = nullptr) {
  using C = ComplexT<Real>;
  using std::abs;
  using std::pow;
  const C one(Real(1), Real(0));
  const Real R(kHypRadius);
  const bool terminating = is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b);
  auto record = [&](HypMethod m) {
    if (used) *used = m;
  };

  if (method == HypMethod::Auto) {
    if (z.imag() == 0 && z.real() >= 1 && !terminating)
      throw std::domain_error("2F1 argument on the branch cut [1, inf)");
    if (abs(z) <= R || terminating) method = HypMethod::Series;
    else if (abs(one - z) <= R && !is_integer(p.cab())) method = HypMethod::Connection;
    else if (abs(z / (z - one)) <= R) method = HypMethod::Pfaff;
    else if (abs(z) >= 1 / R && !is_integer(p.a - p.b)) method = HypMethod::Inversion;
    else if (abs(z / (z - one)) >= 1 / R && !is_integer(p.a - (p.c - p.b))) method = HypMethod::PfaffInversion;
    else method = HypMethod::Continuation;
  }
  record(method);

  switch (method) {
    case HypMethod::Series:
      return detail::hyp_series<Real>(p, z);
    case HypMethod::Connection: {
      if (is_integer(p.cab())) throw NumericalError("connection formula needs c-a-b outside Z");
      const C w = one - z;
      const Real g1 = gamma<Real>(p.c) * gamma<Real>(p.cab()) * rgamma<Real>(p.c - p.a) * rgamma<Real>(p.c - p.b);
      const Real g2 = gamma<Real>(p.c) * gamma<Real>(-p.cab()) * rgamma<Real>(p.a) * rgamma<Real>(p.b);
      C first = C(g1, Real(0)) * detail::hyp_series<Real>(HypParams(p.a, p.b, 1 - p.cab()), w);
      C second(Real(0), Real(0));
      if (g2 != 0)
        second = C(g2, Real(0)) * detail::cpow<Real>(w, p.cab()) *
                 detail::hyp_series<Real>(HypParams(p.c - p.a, p.c - p.b, 1 + p.cab()), w);
      return first + second;
    }
    case HypMethod::Pfaff:
      return detail::cpow<Real>(one - z, -p.a) * hyp2f1<Real>(HypParams(p.a, p.c - p.b, p.c), z / (z - one), HypMethod::Series);
    case HypMethod::Inversion: {
      if (is_integer(p.a - p.b)) throw NumericalError("1/z transformation needs a-b outside Z");
      const C iz = one / z;
      const C mz = -z;
      const Real g1 = gamma<Real>(p.c) * gamma<Real>(p.b - p.a) * rgamma<Real>(p.b) * rgamma<Real>(p.c - p.a);
      const Real g2 = gamma<Real>(p.c) * gamma<Real>(p.a - p.b) * rgamma<Real>(p.a) * rgamma<Real>(p.c - p.b);
      C total(Real(0), Real(0));
      if (g1 != 0)
        total += C(g1, Real(0)) * detail::cpow<Real>(mz, -p.a) *
                 detail::hyp_series<Real>(HypParams(p.a, p.a - p.c + 1, p.a - p.b + 1), iz);
      if (g2 != 0)
        total += C(g2, Real(0)) * detail::cpow<Real>(mz, -p.b) *
                 detail::hyp_series<Real>(HypParams(p.b, p.b - p.c + 1, p.b - p.a + 1), iz);
      return total;
    }
    case HypMethod::PfaffInversion:
      return detail::cpow<Real>(one - z, -p.a) *
             hyp2f1<Real>(HypParams(p.a, p.c - p.b, p.c), z / (z - one), HypMethod::Inversion);
    case HypMethod::Continuation:
      return detail::hyp_continuation<Real>(p, z);
    case HypMethod::Auto:
      break;
  }
  throw NumericalError("no 2F1 evaluation region applies for " + p.to_string());
}

/// Connection formula around z = 1 written in w = 1 - z, with the caller
/// supplying w^(c-a-b).  Used where the natural branch of (1-z)^(c-a-b) is
/// not the principal one (points of a curve crossing the cut).
template <class Real>
ComplexT<Real> hyp2f1_near_one(const HypParams& p, const ComplexT<Real>& w, const ComplexT<Real>& w_pow_cab) {
  using C = ComplexT<Real>;
  if (is_integer(p.cab())) throw NumericalError("connection formula needs c-a-b outside Z");
  const Real g1 = gamma<Real>(p.c) * gamma<Real>(p.cab()) * rgamma<Real>(p.c - p.a) * rgamma<Real>(p.c - p.b);
  const Real g2 = gamma<Real>(p.c) * gamma<Real>(-p.cab()) * rgamma<Real>(p.a) * rgamma<Real>(p.b);
  return C(g1, Real(0)) * detail::hyp_series<Real>(HypParams(p.a, p.b, 1 - p.cab()), w) +
         C(g2, Real(0)) * w_pow_cab * detail::hyp_series<Real>(HypParams(p.c - p.a, p.c - p.b, 1 + p.cab()), w);
}

/// s_{a,b;c}(z) = z^(1-c) 2F1(a-c+1, b-c+1; 2-c; z) / 2F1(a,b;c;z), principal branch.
template <class Real>
ComplexT<Real> schwarz_s(const HypParams& p, const ComplexT<Real>& z) {
  using std::abs;
  const HypParams q(p.a - p.c + 1, p.b - p.c + 1, 2 - p.c);
  const ComplexT<Real> den = hyp2f1<Real>(p, z);
  if (abs(den) < Real(1e-300) || abs(den) < 64 * detail::epsilon<Real>() * abs(hyp2f1<Real>(q, z)))
    throw NumericalError("Schwarz function pole: 2F1" + p.to_string() + " vanishes");
  return detail::cpow<Real>(z, 1 - p.c) * hyp2f1<Real>(q, z) / den;
}

}  // namespace prymcheck
