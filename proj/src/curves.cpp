#include "prymcheck/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

namespace prymcheck {

namespace {

void require_char_above_3(const FqField& F) {
  if (F.p() == 2 || F.p() == 3) throw std::invalid_argument("characteristic 2 and 3 are excluded, got " + F.name());
}

std::vector<std::pair<Elem, Elem>> points_on(const FqField& F, Elem a) {
  // x^6 + 4 y^3 = a^2  <=>  y^3 = (a^2 - x^6) / 4
  std::vector<std::pair<Elem, Elem>> pts;
  const Elem a2 = F.mul(a, a);
  const Elem inv4 = F.inv(F.from_int(4));
  const std::uint64_t n = F.q() - 1;
  const std::uint64_t g = std::gcd<std::uint64_t>(3, n);
  for (Elem x = 0; x < F.q(); ++x) {
    const Elem r = F.mul(F.sub(a2, F.pow(x, 6)), inv4);
    if (r == 0) {
      pts.emplace_back(x, 0);
      continue;
    }
    const std::uint64_t d = F.dlog(r);
    if (g == 1) {
      // 3 is invertible mod q-1
      std::uint64_t inv3 = 1;
      while ((3 * inv3) % n != 1 % n) ++inv3;
      pts.emplace_back(x, F.exp(d * inv3 % n));
    } else if (d % 3 == 0) {
      for (std::uint64_t j = 0; j < 3; ++j) pts.emplace_back(x, F.exp(d / 3 + j * (n / 3)));
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

CurveXLambda::CurveXLambda(FieldPtr f, Elem lam) : field(std::move(f)), lambda(lam) {
  require_char_above_3(*field);
  if (field->q() % 6 != 1) throw std::invalid_argument("X_lambda counting needs q = 1 mod 6, got " + field->name());
  if (lambda >= field->q()) throw std::invalid_argument("lambda is not a field element");
  if (lambda == 0 || lambda == 1) throw std::invalid_argument("lambda must avoid {0, 1}");
}

Elem CurveXLambda::u(Elem x) const {
  const FqField& F = *field;
  const Elem omx = F.sub(1, x);
  const Elem oml = F.sub(1, F.mul(lambda, x));
  return F.mul(F.mul(F.pow(x, 4), F.pow(omx, 3)), oml);
}

CurveELambda::CurveELambda(FieldPtr f, Elem lam) : field(std::move(f)), lambda(lam) {
  require_char_above_3(*field);
  if (lambda >= field->q()) throw std::invalid_argument("lambda is not a field element");
  const Elem disc = field->mul(field->from_int(16), field->mul(lambda, lambda));
  if (disc == 0) throw std::invalid_argument("E_lambda is singular: 16 lambda^2 = 0");
}

CurveCa::CurveCa(FieldPtr f, Elem a_) : field(std::move(f)), a(a_) {
  require_char_above_3(*field);
  if (a == 0 || a >= field->q()) throw std::invalid_argument("a must be a nonzero field element");
}

Elem CurveCa::lambda_of(Elem x) const {
  const FqField& F = *field;
  return F.div(F.pow(x, 6), F.mul(a, a));
}

bool same_set(const TracePair& x, const TracePair& y) {
  return (x.t1 == y.t1 && x.t2 == y.t2) || (x.t1 == y.t2 && x.t2 == y.t1);
}

ECount count_E(const CurveELambda& curve) {
  const FqField& F = *curve.field;
  const MultChar phi = quadratic_char(curve.field);
  const Elem c = F.mul(F.from_int(16), F.mul(curve.lambda, curve.lambda));
  long long count = 1;  // point at infinity
  for (Elem x = 0; x < F.q(); ++x) {
    const Elem rhs = F.add(F.pow(x, 3), c);
    const int k = phi.value_exponent(rhs);
    count += (k < 0) ? 1 : (k == 0 ? 2 : 0);
  }
  return {count, static_cast<long long>(F.q()) + 1 - count};
}

long long branch_correction(const CurveXLambda& curve) {
  const FqField& F = *curve.field;
  long long extra = 2 + 1;  // over x = 0 and over x = 1/lambda
  if (F.is_nth_power(F.sub(1, curve.lambda), 3)) extra += 3;
  if (F.is_square(curve.lambda)) extra += 2;
  return extra;
}

long long count_X_smooth(const CurveXLambda& curve) {
  const FqField& F = *curve.field;
  const Elem inv_lambda = F.inv(curve.lambda);
  long long affine = 0;
  for (Elem x = 2; x < F.q(); ++x) {
    if (x == inv_lambda) continue;
    const Elem omx = F.sub(1, x);
    const Elem oml = F.sub(1, F.mul(curve.lambda, x));
    // sum_{j=0..5} eta^j(u) = 6 if eta(u) = 1 else 0
    const std::uint64_t k = (4ull * F.dlog(x) + 3ull * F.dlog(omx) + F.dlog(oml)) % 6;
    if (k == 0) affine += 6;
  }
  return affine + branch_correction(curve);
}

long long count_X_naive(const CurveXLambda& curve, std::uint32_t naive_loop_limit) {
  const FqField& F = *curve.field;
  const std::uint64_t q = F.q();
  long long affine = 0;
  for (Elem x = 0; x < q; ++x) {
    const Elem omx = F.sub(1, x);
    const Elem oml = F.sub(1, F.mul_poly(curve.lambda, x));
    const Elem u = F.mul_poly(F.mul_poly(F.pow_poly(x, 4), F.pow_poly(omx, 3)), oml);
    if (u == 0) continue;  // branch fibres are handled below
    if (q <= naive_loop_limit) {
      for (Elem y = 1; y < q; ++y)
        if (F.pow_poly(y, 6) == u) ++affine;
    } else if (F.pow_poly(u, (q - 1) / 6) == 1) {
      affine += 6;
    }
  }
  long long extra = 3;
  if (F.pow_poly(F.sub(1, curve.lambda), (q - 1) / 3) == 1) extra += 3;
  if (F.pow_poly(curve.lambda, (q - 1) / 2) == 1) extra += 2;
  return affine + extra;
}

TracePair prym_trace_pair(const CurveXLambda& curve, int unit_exponent) {
  const FqField& F = *curve.field;
  const MultChar eta = sextic_char(curve.field);
  const Elem minus_one = F.neg(1);
  const CycZ6 q(static_cast<long long>(F.q()));
  const CycQ6 f1 = fhyp_2f1(eta, eta.pow(2), eta.pow(5), curve.lambda);
  const CycQ6 f2 = fhyp_2f1(eta.inverse(), eta.pow(-2), eta.pow(-5), curve.lambda);
  const CycQ6 t1 = CycQ6(-eta.value(minus_one) * q * root_of_unity(unit_exponent)) * f1;
  const CycQ6 t2 = CycQ6(-eta.inverse().value(minus_one) * q * root_of_unity(-unit_exponent)) * f2;
  if (!t1.is_integral() || !t2.is_integral())
    throw std::logic_error("q * 2F1 is not integral; normalization is off");
  return {t1.num(), t2.num()};
}

TraceRow verify_trace_row(const FieldPtr& field, Elem lambda, bool with_naive, int unit_exponent) {
  const CurveXLambda X(field, lambda);
  const CurveELambda E(field, lambda);
  TraceRow row;
  row.q = field->q();
  row.lambda = lambda;
  row.count_X = count_X_smooth(X);
  row.a_E = count_E(E).a_E;
  row.pair = prym_trace_pair(X, unit_exponent);
  const CycZ6 lhs(static_cast<long long>(row.q) + 1 - row.count_X);
  row.additivity = lhs == CycZ6(row.a_E) + row.pair.t1 + row.pair.t2;
  row.conjugate = row.pair.t2 == conj(row.pair.t1);
  const double bound = 2.0 * std::sqrt(static_cast<double>(row.q)) + 1e-9;
  row.weil = std::abs(embed(row.pair.t1)) <= bound && std::abs(embed(conj(row.pair.t1))) <= bound &&
             static_cast<double>(std::llabs(row.a_E)) <= bound;
  if (with_naive) {
    row.count_X_naive = count_X_naive(X);
    row.naive_agrees = row.count_X_naive == row.count_X;
  }
  return row;
}

std::optional<int> calibrate_trace_unit(const std::vector<FieldPtr>& fields) {
  std::vector<int> good;
  for (int u = 0; u < 6; ++u) {
    bool all = true;
    for (const auto& F : fields) {
      for (Elem lam = 2; lam < F->q() && all; ++lam) all = verify_trace_row(F, lam, false, u).additivity;
      if (!all) break;
    }
    if (all) good.push_back(u);
  }
  if (good.size() != 1) return std::nullopt;
  return good.front();
}

ZetaNumerator zeta_numerator(std::uint32_t p, std::uint32_t lambda) {
  ZetaNumerator z;
  z.q = p;
  const long long q = p;
  std::vector<long long> s(4, 0);
  for (std::uint32_t n = 1; n <= 3; ++n) {
    auto F = FqField::make(p, n);
    const long long N = count_X_smooth(CurveXLambda(F, lambda));
    z.counts.push_back(N);
    long long qn = 1;
    for (std::uint32_t i = 0; i < n; ++i) qn *= q;
    s[n] = qn + 1 - N;
  }
  // Newton: e1 = s1, 2 e2 = e1 s1 - s2, 3 e3 = e2 s1 - e1 s2 + s3
  const long long e1 = s[1];
  long long t2 = e1 * s[1] - s[2];
  if (t2 % 2 != 0) z.integral = false;
  const long long e2 = t2 / 2;
  long long t3 = e2 * s[1] - e1 * s[2] + s[3];
  if (t3 % 3 != 0) z.integral = false;
  const long long e3 = t3 / 3;
  z.coefficients = {1, -e1, e2, -e3, q * e2, -q * q * e1, q * q * q};

  // reciprocal roots are the roots of T^6 + c1 T^5 + ... + c6
  Eigen::Matrix<double, 6, 6> companion = Eigen::Matrix<double, 6, 6>::Zero();
  for (int i = 1; i < 6; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < 6; ++i) companion(i, 5) = -static_cast<double>(z.coefficients[static_cast<std::size_t>(6 - i)]);
  Eigen::EigenSolver<Eigen::Matrix<double, 6, 6>> solver(companion, false);
  using LC = std::complex<long double>;
  for (int i = 0; i < 6; ++i) {
    LC r(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
    for (int it = 0; it < 50; ++it) {  // Newton polish
      LC f = 0, df = 0;
      for (int k = 0; k <= 6; ++k) {
        df = df * r + f;
        f = f * r + static_cast<long double>(z.coefficients[static_cast<std::size_t>(k)]);
      }
      if (std::abs(df) == 0.0L) break;
      LC step = f / df;
      r -= step;
      if (std::abs(step) < 1e-18L * std::abs(r)) break;
    }
    z.roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  }
  const double sq = std::sqrt(static_cast<double>(q));
  for (const auto& r : z.roots) {
    z.max_modulus_error = std::max(z.max_modulus_error, std::abs(std::abs(r) - sq));
    const std::complex<double> image = static_cast<double>(q) / r;
    double best = 1e300;
    for (const auto& s2 : z.roots) best = std::min(best, std::abs(image - s2));
    z.functional_eq_error = std::max(z.functional_eq_error, best);
  }
  return z;
}

std::vector<std::pair<Elem, Elem>> enumerate_Ca_points(const CurveCa& curve) {
  return points_on(*curve.field, curve.a);
}

SixthPowerReport check_sixth_power_criterion(const CurveCa& curve) {
  const FqField& F = *curve.field;
  const MultChar eta = sextic_char(curve.field);
  const Elem inv4 = F.inv(F.from_int(4));
  SixthPowerReport rep;
  std::map<Elem, TracePair> cache;
  const auto pts = enumerate_Ca_points(curve);
  rep.points = pts.size();
  for (const auto& [x, y] : pts) {
    if (x == 0 || y == 0) continue;
    const Elem lam = curve.lambda_of(x);
    if (lam == 0 || lam == 1) continue;
    ++rep.checked;
    const Elem t = F.mul(F.sub(1, lam), inv4);
    const Elem lhs = F.mul(lam, F.mul(t, t));
    const Elem rhs = F.pow(F.div(F.mul(x, y), curve.a), 6);
    if (lhs != rhs) ++rep.identity_failures;
    if (eta.value_exponent(lhs) != 0) ++rep.eta_failures;
    auto it = cache.find(lam);
    if (it == cache.end()) it = cache.emplace(lam, prym_trace_pair(CurveXLambda(curve.field, lam))).first;
    if (!it->second.is_rational() || it->second.t1 != it->second.t2) ++rep.irrational_pairs;
  }
  return rep;
}

CoverReport check_cover_identity(const FieldPtr& field) {
  const FqField& F = *field;
  CoverReport rep;
  for (const auto& [x, y] : points_on(F, 1)) {
    if (x == 0) continue;
    ++rep.checked;
    const Elem u = F.div(y, x);
    const Elem x3 = F.pow(x, 3);
    const Elem v = F.add(x3, F.div(F.mul(F.from_int(2), F.pow(y, 3)), x3));
    const Elem lhs = F.mul(v, v);
    const Elem rhs = F.add(F.mul(F.from_int(4), F.pow(u, 6)), 1);
    if (lhs != rhs) ++rep.failures;
  }
  return rep;
}

}  // namespace prymcheck
