#include "prymcheck/periods.hpp"

#include <algorithm>
#include <cmath>

#include "prymcheck/cyclotomic.hpp"
#include "prymcheck/ffield.hpp"

namespace prymcheck {

namespace {

template <class Real>
using C = ComplexT<Real>;

template <class Real>
C<Real> cr(double x) {
  return C<Real>(Real(x), Real(0));
}

template <class Real>
C<Real> creal(const Real& x) {
  return C<Real>(x, Real(0));
}

template <class Real>
C<Real> zeta6(long long k) {
  return unit_root<Real>(((k % 6) + 6) % 6, 6);
}

template <class Real>
C<Real> cpow_rat(const C<Real>& z, const Rat& e) {
  using std::pow;
  return pow(z, creal<Real>(to_real<Real>(e)));
}

// Constant prefactors of the period formulas.
template <class Real>
struct PeriodConstants {
  C<Real> A1, A5;      // mu_1 = A1 F(1/6,1/3;5/6), mu_5 = A5 F(5/6,2/3;7/6)
  C<Real> c1, c4, c5;  // nu_1 = c1 L F(1/2,1/3;7/6), nu_4 = c4 L^-2, nu_5 = c5 L^-1 F(1/2,2/3;5/6)

  PeriodConstants() {
    const C<Real> one = cr<Real>(1);
    const C<Real> z6 = zeta6<Real>(1), z3 = zeta6<Real>(2), z3sq = zeta6<Real>(4), z6_5 = zeta6<Real>(5);
    const C<Real> m23 = unit_root<Real>(-1, 3);  // (-1)^(-2/3)
    const C<Real> m43 = unit_root<Real>(-2, 3);  // (-1)^(-4/3)
    A1 = cr<Real>(2) * (one - z3sq) * creal<Real>(beta<Real>(Rat(1, 3), Rat(1, 2)));
    A5 = cr<Real>(2) * (one - z3) * creal<Real>(beta<Real>(Rat(2, 3), Rat(1, 2)));
    c1 = (one - z6) * (one - z3) * m23 * creal<Real>(beta<Real>(Rat(1, 3), Rat(5, 6)));
    c4 = (one - z3sq) * (one - z3) * m23 * creal<Real>(beta<Real>(Rat(1, 3), Rat(1, 3)));
    c5 = (one - z6_5) * (one - z3sq) * m43 * creal<Real>(beta<Real>(Rat(2, 3), Rat(1, 6)));
  }
};

template <class Real>
std::array<C<Real>, 6> periods_t(const C<Real>& lambda, int t) {
  const PeriodConstants<Real> K;
  const C<Real> L = zeta6<Real>(t) * cpow_rat<Real>(lambda, Rat(1, 6));
  const C<Real> zero = cr<Real>(0);
  std::array<C<Real>, 6> out;
  out[0] = K.A1 * hyp2f1<Real>(HypParams(Rat(1, 6), Rat(1, 3), Rat(5, 6)), lambda);
  out[1] = zero;  // the (1 - e(0)) factor
  out[2] = K.A5 * hyp2f1<Real>(HypParams(Rat(5, 6), Rat(2, 3), Rat(7, 6)), lambda);
  out[3] = K.c1 * L * hyp2f1<Real>(HypParams(Rat(1, 2), Rat(1, 3), Rat(7, 6)), lambda);
  out[4] = K.c4 / (L * L);
  out[5] = K.c5 / L * hyp2f1<Real>(HypParams(Rat(1, 2), Rat(2, 3), Rat(5, 6)), lambda);
  return out;
}

template <class Real>
std::pair<cd, cd> qm_entries_t(cd X, cd Y, int tp) {
  const PeriodConstants<Real> K;
  using std::cbrt;
  const C<Real> x = from_cd<Real>(X);
  const C<Real> y4 = creal<Real>(cbrt(Real(4))) * from_cd<Real>(Y);
  const C<Real> one = cr<Real>(1);
  const C<Real> z3 = zeta6<Real>(2), z3sq = zeta6<Real>(4);
  const C<Real> d12 = (one - z3) * creal<Real>(beta<Real>(Rat(2, 3), Rat(1, 2)));
  const C<Real> d21 = (one - z3sq) * creal<Real>(beta<Real>(Rat(1, 3), Rat(1, 2)));
  const C<Real> m12 = K.c1 * zeta6<Real>(tp) * x * y4 / d12;
  const C<Real> m21 = K.c5 * zeta6<Real>(-tp) / (x * y4) / d21;
  return {to_cd<Real>(m12), to_cd<Real>(m21)};
}

template <class Real>
cd beta_identity_t() {
  const C<Real> one = cr<Real>(1);
  const C<Real> unit = (one - zeta6<Real>(1)) * (one - zeta6<Real>(5));
  const Real num = beta<Real>(Rat(2, 3), Rat(1, 6)) * beta<Real>(Rat(1, 3), Rat(5, 6));
  const Real den = beta<Real>(Rat(1, 3), Rat(1, 2)) * beta<Real>(Rat(2, 3), Rat(1, 2));
  return to_cd<Real>(unit * creal<Real>(num / den));
}

template <class Real>
cd schwarz_near_one_t(const HypParams& p, double Y) {
  using std::cbrt;
  using std::pow;
  const C<Real> r = creal<Real>(cbrt(Real(4)) * Real(Y));  // cube root of w = 4 Y^3
  const C<Real> w = r * r * r;
  const Rat e3 = p.cab() * 3;
  if (!is_integer(e3)) throw NumericalError("c-a-b is not in (1/3)Z for " + p.to_string());
  C<Real> rp = cr<Real>(1);
  const long long n = e3.numerator();
  for (long long i = 0; i < std::llabs(n); ++i) rp *= r;
  if (n < 0) rp = cr<Real>(1) / rp;
  const HypParams q(p.a - p.c + 1, p.b - p.c + 1, 2 - p.c);
  const C<Real> lead = cpow_rat<Real>(cr<Real>(1) - w, 1 - p.c);
  return to_cd<Real>(lead * hyp2f1_near_one<Real>(q, w, rp) / hyp2f1_near_one<Real>(p, w, rp));
}

Eigen::Matrix<double, 6, 1> to_real6(const Vec3c& v) {
  Eigen::Matrix<double, 6, 1> r;
  for (int i = 0; i < 3; ++i) {
    r(2 * i) = v[static_cast<std::size_t>(i)].real();
    r(2 * i + 1) = v[static_cast<std::size_t>(i)].imag();
  }
  return r;
}

Eigen::Vector4d to_real4(const Vec2c& v) { return {v[0].real(), v[0].imag(), v[1].real(), v[1].imag()}; }

cd z6(long long k) { return std::polar(1.0, M_PI * static_cast<double>(((k % 6) + 6) % 6) / 3.0); }

template <class Mat, class Vec>
Membership solve_membership(const Mat& B, const Vec& v) {
  Membership m;
  Eigen::VectorXd c = B.colPivHouseholderQr().solve(v);
  m.coefficients = c;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    m.max_integer_deviation = std::max(m.max_integer_deviation, std::abs(c(i) - std::round(c(i))));
  const double nv = v.norm();
  m.residual = (B * c - v).norm() / (nv > 0 ? nv : 1.0);
  return m;
}

HypParams swap_params(const HypParams& p) { return HypParams(p.a - p.c + 1, p.b - p.c + 1, 2 - p.c); }

// Coefficient of the dominant (-z)^(-min(a,b)) term as z -> infinity.
template <class Real>
std::pair<Real, Rat> infinity_leading(const HypParams& p) {
  const Rat lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
  return {gamma<Real>(p.c) * gamma<Real>(hi - lo) * rgamma<Real>(hi) * rgamma<Real>(p.c - lo), lo};
}

// Value of F(a,b;c;z) as z -> 1 is dominated by the regular term when
// c-a-b > 0 and by (1-z)^(c-a-b) otherwise; these are its coefficients.
template <class Real>
Real near_one_leading(const HypParams& p) {
  if (p.cab() > 0) return gamma<Real>(p.c) * gamma<Real>(p.cab()) * rgamma<Real>(p.c - p.a) * rgamma<Real>(p.c - p.b);
  return gamma<Real>(p.c) * gamma<Real>(-p.cab()) * rgamma<Real>(p.a) * rgamma<Real>(p.b);
}

void finish_sequence(SequenceCheck& s, const ExtensionOptions& opt) {
  const std::size_t n = s.values.size();
  if (n >= 2) {
    const cd last = s.values[n - 1];
    s.last_relative_change = std::abs(last - s.values[n - 2]) / std::max(std::abs(last), 1e-300);
  }
  if (s.predicted) s.limit_error = std::abs(s.values.back() - *s.predicted) / std::max(std::abs(*s.predicted), 1e-300);
  s.ok = std::isfinite(s.last_relative_change) && s.last_relative_change <= opt.stabilize_tol &&
         (!s.predicted || s.limit_error <= opt.limit_tol) &&
         (s.max_second_difference < 0 || s.max_second_difference <= opt.second_difference_bound);
}

}  // namespace

PeriodPair period_vectors(cd lambda, int t, Precision prec) {
  if (lambda == cd(0, 0)) throw std::domain_error("period vectors need lambda != 0");
  std::array<cd, 6> raw;
  if (prec == Precision::Quad) {
    auto q = periods_t<Quad>(from_cd<Quad>(lambda), t);
    for (std::size_t i = 0; i < 6; ++i) raw[i] = to_cd<Quad>(q[i]);
  } else {
    raw = periods_t<double>(lambda, t);
  }
  PeriodPair pp;
  pp.branch = ((t % 6) + 6) % 6;
  pp.mu = {{raw[0], cd(0, 0), raw[2]}, 'm', lambda};
  pp.nu = {{raw[3], raw[4], raw[5]}, 'n', lambda};
  return pp;
}

C1Point c1_point(cd X, int cube_branch) {
  const cd w = (1.0 - std::pow(X, 6)) / 4.0;
  cd Y = std::pow(w, 1.0 / 3.0);
  if (w.imag() == 0 && w.real() < 0) Y = -std::cbrt(-w.real());  // keep real points real
  Y *= z6(2 * cube_branch);
  return {X, Y};
}

double c1_residual(const C1Point& P) { return std::abs(std::pow(P.X, 6) + 4.0 * std::pow(P.Y, 3) - 1.0); }

int sixth_root_branch(cd lambda, cd X) {
  const cd principal = std::pow(lambda, 1.0 / 6.0);
  int best = 0;
  double err = 1e300;
  for (int t = 0; t < 6; ++t) {
    const double e = std::abs(z6(t) * principal - X);
    if (e < err) {
      err = e;
      best = t;
    }
  }
  return best;
}

PeriodPair period_vectors_at(const C1Point& P, Precision prec) {
  const cd lambda = std::pow(P.X, 6);
  return period_vectors(lambda, sixth_root_branch(lambda, P.X), prec);
}

Vec3c apply_D(const Vec3c& v, int k) { return {z6(k) * v[0], z6(4LL * k) * v[1], z6(5LL * k) * v[2]}; }

Vec2c apply_D2(const Vec2c& v, int k) { return {z6(k) * v[0], z6(5LL * k) * v[1]}; }

Vec2c project(const Vec3c& v) { return {v[0], v[2]}; }

DiagRelationReport check_diagonal_relations() {
  using D3 = std::array<CycZ6, 3>;
  auto diag = [](long long k) -> D3 { return {root_of_unity(k), root_of_unity(4 * k), root_of_unity(5 * k)}; };
  const D3 id{CycZ6(1), CycZ6(1), CycZ6(1)};
  const D3 two_mid{CycZ6(0), CycZ6(2), CycZ6(0)};
  const D3 two_z_mid{CycZ6(0), CycZ6(2) * CycZ6::zeta(), CycZ6(0)};
  DiagRelationReport r;
  const D3 sq = diag(2), cu = diag(3), d1 = diag(1);
  r.square_relation = true;
  r.cube_relation = true;
  for (std::size_t i = 0; i < 3; ++i) {
    r.square_relation = r.square_relation && sq[i] == -id[i] + d1[i] + two_z_mid[i];
    r.cube_relation = r.cube_relation && cu[i] == -id[i] + two_mid[i];
  }
  return r;
}

PeriodLattice lattice_build(const PeriodPair& periods, double rank_tol) {
  PeriodLattice L;
  L.relations_ok = check_diagonal_relations().ok();
  const Vec3c& mu = periods.mu.v;
  const Vec3c& nu = periods.nu.v;
  L.gens[0] = mu;
  L.gens[1] = nu;
  L.gens[2] = apply_D(mu);
  L.gens[3] = apply_D(nu);
  L.gens[4] = {cd(0, 0), 2.0 * nu[1], cd(0, 0)};
  L.gens[5] = {cd(0, 0), 2.0 * z6(1) * nu[1], cd(0, 0)};
  for (int j = 0; j < 6; ++j) L.real_gens.col(j) = to_real6(L.gens[static_cast<std::size_t>(j)]);
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(L.real_gens);
  L.singular_values = svd.singularValues();
  L.rank = static_cast<int>((L.singular_values.array() > rank_tol * std::max(1.0, L.singular_values(0))).count());
  return L;
}

Membership lattice_coordinates(const PeriodLattice& L, const Vec3c& v) {
  return solve_membership(L.real_gens, Eigen::VectorXd(to_real6(v)));
}

ProjectedLattice project_lattice(const PeriodPair& periods, double rank_tol) {
  ProjectedLattice L;
  const Vec2c pm = project(periods.mu.v), pn = project(periods.nu.v);
  L.gens = {pm, apply_D2(pm), pn, apply_D2(pn)};
  for (int j = 0; j < 4; ++j) L.real_gens.col(j) = to_real4(L.gens[static_cast<std::size_t>(j)]);
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(L.real_gens);
  L.singular_values = svd.singularValues();
  L.rank = static_cast<int>((L.singular_values.array() > rank_tol * std::max(1.0, L.singular_values(0))).count());
  return L;
}

Membership projected_coordinates(const ProjectedLattice& L, const Vec2c& v) {
  return solve_membership(L.real_gens, Eigen::VectorXd(to_real4(v)));
}

Eigen::Matrix2cd QMatrix::matrix() const {
  Eigen::Matrix2cd m;
  m << cd(0, 0), m12, m21, cd(0, 0);
  return m;
}

QMatrix qm_matrix(const C1Point& P, int t_prime, Precision prec) {
  if (P.X == cd(0, 0) || P.Y == cd(0, 0)) throw std::domain_error("M needs X, Y != 0");
  QMatrix M;
  M.point = P;
  M.t_prime = ((t_prime % 6) + 6) % 6;
  auto e = prec == Precision::Quad ? qm_entries_t<Quad>(P.X, P.Y, M.t_prime) : qm_entries_t<double>(P.X, P.Y, M.t_prime);
  M.m12 = e.first;
  M.m21 = e.second;
  return M;
}

QMReport check_qm_stabilizes(const ProjectedLattice& L, const QMatrix& M, double tol) {
  QMReport r;
  r.expected = {Eigen::Vector4d(0, 0, 2, 0), Eigen::Vector4d(0, 0, 2, -2), Eigen::Vector4d(1, 0, 0, 0),
                Eigen::Vector4d(1, -1, 0, 0)};
  for (std::size_t i = 0; i < 4; ++i) {
    Membership m = projected_coordinates(L, M.apply(L.gens[i]));
    r.coefficients[i] = m.coefficients;
    r.max_integer_deviation = std::max(r.max_integer_deviation, m.max_integer_deviation);
    r.max_residual = std::max(r.max_residual, m.residual);
    r.max_pattern_error = std::max(r.max_pattern_error, (m.coefficients - r.expected[i]).cwiseAbs().maxCoeff());
  }
  r.m_squared_error = std::abs(M.m12 * M.m21 - 2.0);
  r.stabilizes = r.max_integer_deviation <= tol && r.max_residual <= 1e-8;
  r.pattern_ok = r.stabilizes && r.max_pattern_error <= tol;
  return r;
}

TPrimeCalibration calibrate_t_prime(const C1Point& P, Precision prec) {
  TPrimeCalibration cal;
  const ProjectedLattice L = project_lattice(period_vectors_at(P, prec));
  std::vector<int> good;
  for (int t = 0; t < 6; ++t) {
    const QMReport rep = check_qm_stabilizes(L, qm_matrix(P, t, prec));
    cal.pattern_error[static_cast<std::size_t>(t)] = rep.max_pattern_error;
    cal.stabilizes[static_cast<std::size_t>(t)] = rep.stabilizes;
    if (rep.pattern_ok) good.push_back(t);
  }
  if (good.size() == 1) cal.t_prime = good.front();
  return cal;
}

cd beta_identity_value(Precision prec) {
  return prec == Precision::Quad ? beta_identity_t<Quad>() : beta_identity_t<double>();
}

namespace {

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % m);
    b = static_cast<long long>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

int legendre(long long u, long long p) {
  const long long r = mod_pow(u, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

// a = p^alpha * u with p not dividing u.
std::pair<long long, long long> split(long long a, long long p) {
  long long alpha = 0;
  while (a % p == 0) {
    a /= p;
    ++alpha;
  }
  return {alpha, a};
}

}  // namespace

int hilbert_symbol(long long a, long long b, long long p) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  const auto [alpha, u] = split(a, p);
  const auto [beta_, v] = split(b, p);
  if (p == 2) {
    auto eps = [](long long x) { return (((x - 1) / 2) % 2 + 2) % 2; };
    auto omega = [](long long x) { return (((x * x - 1) / 8) % 2 + 2) % 2; };
    const long long e = eps(u) * eps(v) + alpha * omega(v) + beta_ * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int s = ((alpha * beta_) % 2 != 0 && ((p - 1) / 2) % 2 != 0) ? -1 : 1;
  if (beta_ % 2 != 0) s *= legendre(u, p);
  if (alpha % 2 != 0) s *= legendre(v, p);
  return s;
}

long long quaternion_discriminant(long long a, long long b) {
  std::vector<long long> primes{2};
  for (long long x : {std::llabs(a), std::llabs(b)})
    for (auto pf : prime_factors(static_cast<std::uint64_t>(x)))
      if (const auto p = static_cast<long long>(pf); std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  long long disc = 1;
  for (long long p : primes)
    if (hilbert_symbol(a, b, p) == -1) disc *= p;
  return disc;
}

QuaternionReport check_quaternion_relations(const C1Point& P, int t_prime, Precision prec) {
  QuaternionReport r;
  const cd zeta3 = z6(2);
  Eigen::Matrix2cd I = Eigen::Matrix2cd::Zero();
  I(0, 0) = 1.0 + 2.0 * zeta3;
  I(1, 1) = 1.0 + 2.0 * std::conj(zeta3);
  const Eigen::Matrix2cd M = qm_matrix(P, t_prime, prec).matrix();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  r.i_squared_error = (I * I + 3.0 * id).cwiseAbs().maxCoeff();
  r.m_squared_error = (M * M - 2.0 * id).cwiseAbs().maxCoeff();
  r.anticommutator_error = (I * M + M * I).cwiseAbs().maxCoeff();
  r.hilbert_2 = hilbert_symbol(-3, 2, 2);
  r.hilbert_3 = hilbert_symbol(-3, 2, 3);
  r.hilbert_inf = hilbert_symbol(-3, 2, 0);
  r.discriminant = quaternion_discriminant(-3, 2);
  return r;
}

cd schwarz(const HypParams& p, cd z, Precision prec) {
  if (prec == Precision::Quad) return to_cd<Quad>(schwarz_s<Quad>(p, from_cd<Quad>(z)));
  return schwarz_s<double>(p, z);
}

SchwarzConstants schwarz_constants(Precision prec) {
  if (prec == Precision::Quad) {
    const PeriodConstants<Quad> K;
    return {to_cd<Quad>(K.c1 / K.A1), to_cd<Quad>(K.c5 / K.A5)};
  }
  const PeriodConstants<double> K;
  return {K.c1 / K.A1, K.c5 / K.A5};
}

SchwarzRatioReport check_schwarz_ratios(cd lambda, int t, Precision prec) {
  const PeriodPair pp = period_vectors(lambda, t, prec);
  const SchwarzConstants k = schwarz_constants(prec);
  const cd r1 = pp.nu.v[0] / pp.mu.v[0];
  const cd r5 = pp.nu.v[2] / pp.mu.v[2];
  const cd p1 = k.k1 * z6(t) * schwarz(triple_mu1(), lambda, prec);
  const cd p5 = k.k5 * z6(-t) * schwarz(triple_mu5(), lambda, prec);
  return {std::abs(r1 - p1) / std::abs(r1), std::abs(r5 - p5) / std::abs(r5)};
}

cd schwarz_near_one(const HypParams& p, double Y, Precision prec) {
  return prec == Precision::Quad ? schwarz_near_one_t<Quad>(p, Y) : schwarz_near_one_t<double>(p, Y);
}

HypParams triple_mu1() { return HypParams(Rat(1, 6), Rat(1, 3), Rat(5, 6)); }
HypParams triple_mu5() { return HypParams(Rat(5, 6), Rat(2, 3), Rat(7, 6)); }

bool ExtensionReport::ok() const {
  if (!exponents_in_third_z || sequences.empty()) return false;
  return std::all_of(sequences.begin(), sequences.end(), [](const SequenceCheck& s) { return s.ok; });
}

ExtensionReport check_extension_on_curve(Precision prec, const ExtensionOptions& opt) {
  ExtensionReport rep;
  const HypParams t1 = triple_mu1(), t5 = triple_mu5();
  auto third = [](const HypParams& p) { return is_integer(p.cab() * 3); };
  rep.exponents_in_third_z = third(t1) && third(t5);

  // X -> 0: z^(1-c) = X^(+-1) absorbs the branch, leaving s1/X and s5*X.
  for (int which = 0; which < 2; ++which) {
    SequenceCheck s;
    s.name = which == 0 ? "X->0 s_{1/6,1/3;5/6}/X" : "X->0 s_{5/6,2/3;7/6}*X";
    for (int k = opt.x_exp_min; k <= opt.x_exp_max; ++k) {
      const double X = std::pow(10.0, -k);
      const cd z(std::pow(X, 6), 0);
      s.parameters.push_back(X);
      s.values.push_back(which == 0 ? schwarz(t1, z, prec) / X : schwarz(t5, z, prec) * X);
    }
    s.predicted = cd(1, 0);
    finish_sequence(s, opt);
    rep.sequences.push_back(std::move(s));
  }

  // Y -> 0 from both sides, through the cube root of 1 - X^6 = 4Y^3.
  for (const HypParams* p : {&t1, &t5}) {
    const HypParams q = swap_params(*p);
    const cd predicted(near_one_leading<double>(q) / near_one_leading<double>(*p), 0);
    const double h = opt.second_difference_step;
    std::vector<cd> grid;
    for (int j = -3; j <= 2; ++j) grid.push_back(schwarz_near_one(*p, (j + 0.5) * h, prec));
    double d2 = 0;
    for (std::size_t j = 1; j + 1 < grid.size(); ++j)
      d2 = std::max(d2, std::abs(grid[j + 1] - 2.0 * grid[j] + grid[j - 1]) / (h * h));
    for (double sign : {1.0, -1.0}) {
      SequenceCheck s;
      s.name = std::string(sign > 0 ? "Y->0+ s" : "Y->0- s") + p->to_string();
      for (int k = opt.y_exp_min; k <= opt.y_exp_max; ++k) {
        const double Y = sign * std::pow(10.0, -k);
        s.parameters.push_back(Y);
        s.values.push_back(schwarz_near_one(*p, Y, prec));
      }
      s.predicted = predicted;
      s.max_second_difference = d2;
      finish_sequence(s, opt);
      rep.sequences.push_back(std::move(s));
    }
  }

  // Infinity along X = R e^(i pi/12), so z = X^6 = i R^6 stays off the cut.
  for (const HypParams* p : {&t1, &t5}) {
    const HypParams q = swap_params(*p);
    SequenceCheck s;
    s.name = "X->inf s" + p->to_string();
    cd z;
    for (int k = opt.r_exp_min; k <= opt.r_exp_max; ++k) {
      const double R = std::pow(10.0, k);
      z = cd(0, std::pow(R, 6));
      s.parameters.push_back(R);
      s.values.push_back(schwarz(*p, z, prec));
    }
    const auto [lead_q, eq] = infinity_leading<double>(q);
    const auto [lead_p, ep] = infinity_leading<double>(*p);
    const cd mz = -z;
    s.predicted = std::pow(z, boost::rational_cast<double>(1 - p->c)) * lead_q *
                  std::pow(mz, -boost::rational_cast<double>(eq)) /
                  (lead_p * std::pow(mz, -boost::rational_cast<double>(ep)));
    finish_sequence(s, opt);
    rep.sequences.push_back(std::move(s));
  }
  return rep;
}

}  // namespace prymcheck
