// Periods of X_lambda : y^6 = x^4 (1-x)^3 (1 - lambda x) against the
// holomorphic forms omega_1, omega_4, omega_5, the period lattice they span,
// the quaternionic endomorphism M on the projected lattice, and the
// Schwarz-function continuation along C_1 : X^6 + 4Y^3 = 1.
#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "prymcheck/hyp2f1.hpp"
#include "prymcheck/numeric.hpp"

namespace prymcheck {

using cd = std::complex<double>;
using Vec3c = std::array<cd, 3>;
using Vec2c = std::array<cd, 2>;

struct PeriodVector {
  Vec3c v{};
  char kind = 'm';  // 'm' for mu, 'n' for nu
  cd lambda;
};

struct PeriodPair {
  PeriodVector mu;
  PeriodVector nu;
  int branch = 0;  // t with lambda^(1/6) = zeta6^t * principal root
};

/// mu = (mu_1, 0, mu_5), nu = (nu_1, nu_4, nu_5).  lambda off {0} and off the
/// cut [1, inf).
PeriodPair period_vectors(cd lambda, int t, Precision prec = Precision::Double);

/// A point of C_1 : X^6 + 4Y^3 = 1.
struct C1Point {
  cd X;
  cd Y;
};
/// Y = zeta3^k ((1 - X^6)/4)^(1/3) with the principal cube root.
C1Point c1_point(cd X, int cube_branch = 0);
double c1_residual(const C1Point& P);

/// The t in Z/6 with zeta6^t * principal(lambda^(1/6)) closest to X.
int sixth_root_branch(cd lambda, cd X);

/// Period vectors at lambda = X^6 with lambda^(1/6) = X.
PeriodPair period_vectors_at(const C1Point& P, Precision prec = Precision::Double);

/// Apply diag(zeta6^k, zeta6^(4k), zeta6^(5k)).
Vec3c apply_D(const Vec3c& v, int k = 1);
/// Apply diag(zeta6^k, zeta6^(5k)).
Vec2c apply_D2(const Vec2c& v, int k = 1);
Vec2c project(const Vec3c& v);

/// Exact Z[zeta6] check of the two relations that reduce the eight
/// generators to six:
///   diag(z^2, z^8, z^10) = -id + diag(z, z^4, z^5) + diag(0, 2z, 0)
///   diag(z^3, z^12, z^15) = -id + diag(0, 2, 0)
struct DiagRelationReport {
  bool square_relation = false;
  bool cube_relation = false;
  bool ok() const { return square_relation && cube_relation; }
};
DiagRelationReport check_diagonal_relations();

struct Membership {
  Eigen::VectorXd coefficients;
  double max_integer_deviation = 0;
  double residual = 0;  // relative, |B c - v| / |v|
  bool integral(double tol = 1e-7) const { return max_integer_deviation <= tol; }
};

/// Generators mu, nu, D mu, D nu, diag(0,2,0) nu, diag(0,2 z6,0) nu.
struct PeriodLattice {
  std::array<Vec3c, 6> gens{};
  Eigen::Matrix<double, 6, 6> real_gens;  // columns in R^6
  Eigen::VectorXd singular_values;
  int rank = 0;
  bool relations_ok = false;
};
PeriodLattice lattice_build(const PeriodPair& periods, double rank_tol = 1e-8);
Membership lattice_coordinates(const PeriodLattice& L, const Vec3c& v);

/// Generators pi(mu), D pi(mu), pi(nu), D pi(nu) with D = diag(z6, z6^5).
struct ProjectedLattice {
  std::array<Vec2c, 4> gens{};
  Eigen::Matrix4d real_gens;
  Eigen::Vector4d singular_values;
  int rank = 0;
};
ProjectedLattice project_lattice(const PeriodPair& periods, double rank_tol = 1e-8);
Membership projected_coordinates(const ProjectedLattice& L, const Vec2c& v);

/// The antidiagonal M at a point of C_1 with branch constant t'.
struct QMatrix {
  cd m12, m21;
  C1Point point;
  int t_prime = 0;
  Eigen::Matrix2cd matrix() const;
  Vec2c apply(const Vec2c& v) const { return {m12 * v[1], m21 * v[0]}; }
};
QMatrix qm_matrix(const C1Point& P, int t_prime, Precision prec = Precision::Double);

/// Branch constant for M, fixed by calibrate_t_prime() at X = 1/2.
inline constexpr int kQmBranch = 0;

struct QMReport {
  std::array<Eigen::Vector4d, 4> coefficients;  // M g_i in the basis g_1..g_4
  std::array<Eigen::Vector4d, 4> expected;
  double max_pattern_error = 0;
  double max_integer_deviation = 0;
  double max_residual = 0;
  double m_squared_error = 0;
  bool stabilizes = false;  // every M g_i has integral coordinates
  bool pattern_ok = false;  // and they are the expected ones
  bool ok() const { return stabilizes && pattern_ok; }
};
/// Expected: M pi(mu) = 2 pi(nu), M D pi(mu) = 2 pi(nu) - 2 D pi(nu),
/// M pi(nu) = pi(mu), M D pi(nu) = pi(mu) - D pi(mu).
QMReport check_qm_stabilizes(const ProjectedLattice& L, const QMatrix& M, double tol = 1e-7);

struct TPrimeCalibration {
  std::optional<int> t_prime;  // unique t' whose M matches the pattern
  std::array<double, 6> pattern_error{};
  std::array<bool, 6> stabilizes{};
};
TPrimeCalibration calibrate_t_prime(const C1Point& P, Precision prec = Precision::Double);

/// [(1-z6)(1-z6^5)] B(2/3,1/6) B(1/3,5/6) / (B(1/3,1/2) B(2/3,1/2)); equals 2.
cd beta_identity_value(Precision prec = Precision::Double);

/// Hilbert symbol (a,b)_p; p = 0 is the real place.
int hilbert_symbol(long long a, long long b, long long p);
/// Product of the finite primes where (a,b)_p = -1.
long long quaternion_discriminant(long long a, long long b);

struct QuaternionReport {
  double i_squared_error = 0;    // |I^2 + 3|
  double m_squared_error = 0;    // |M^2 - 2|
  double anticommutator_error = 0;  // |IM + MI|
  int hilbert_2 = 0, hilbert_3 = 0, hilbert_inf = 0;
  long long discriminant = 0;
  bool ok(double tol = 1e-10) const {
    return i_squared_error <= tol && m_squared_error <= tol && anticommutator_error <= tol && discriminant == 6;
  }
};
QuaternionReport check_quaternion_relations(const C1Point& P, int t_prime, Precision prec = Precision::Double);

/// Schwarz triangle function at double or quad working precision.
cd schwarz(const HypParams& p, cd z, Precision prec = Precision::Double);

/// nu_1/mu_1 = k1 zeta6^t s_{1/6,1/3;5/6}(lambda) and
/// nu_5/mu_5 = k5 zeta6^-t s_{5/6,2/3;7/6}(lambda).
struct SchwarzConstants {
  cd k1, k5;
};
SchwarzConstants schwarz_constants(Precision prec = Precision::Double);
struct SchwarzRatioReport {
  double error1 = 0, error5 = 0;  // relative
};
SchwarzRatioReport check_schwarz_ratios(cd lambda, int t, Precision prec = Precision::Double);

/// s evaluated on C_1 near f_1 = 1 as a function of Y, using the cube root
/// 4^(1/3) Y of 1 - X^6 in place of the principal branch.
cd schwarz_near_one(const HypParams& p, double Y, Precision prec = Precision::Double);

struct SequenceCheck {
  std::string name;
  std::vector<double> parameters;
  std::vector<cd> values;
  double last_relative_change = 0;
  std::optional<cd> predicted;  // limit predicted from Gamma coefficients
  double limit_error = 0;       // relative, at the last parameter
  double max_second_difference = -1;  // scaled |f(+h)-2f(0)+f(-h)|/h^2 across the point; -1 if not run
  bool ok = false;
};

struct ExtensionOptions {
  int x_exp_min = 2, x_exp_max = 6;    // X = 10^-k
  int y_exp_min = 2, y_exp_max = 9;    // Y = +-10^-k
  int r_exp_min = 1, r_exp_max = 9;    // X = 10^k e^(i pi/12)
  double stabilize_tol = 1e-6;
  double limit_tol = 1e-6;
  double second_difference_step = 1e-3;
  double second_difference_bound = 1e4;
};

struct ExtensionReport {
  std::vector<SequenceCheck> sequences;
  bool exponents_in_third_z = false;  // c - a - b in (1/3) Z for both triples
  bool ok() const;
};
ExtensionReport check_extension_on_curve(Precision prec = Precision::Double, const ExtensionOptions& opt = {});

/// The two parameter triples carried by pi(mu).
HypParams triple_mu1();
HypParams triple_mu5();

}  // namespace prymcheck
