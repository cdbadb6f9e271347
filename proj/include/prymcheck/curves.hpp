// Point counts on X_lambda : y^6 = x^4 (1-x)^3 (1 - lambda x), on
// E_lambda : y^2 = x^3 + 16 lambda^2 and on C_a : x^6 + 4 y^3 = a^2, plus the
// Frobenius trace pair of the Prym surface read off from the finite 2F1.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prymcheck/characters.hpp"

namespace prymcheck {

using Elem = FqField::Elem;

struct CurveXLambda {
  FieldPtr field;
  Elem lambda;
  /// Throws std::invalid_argument for lambda in {0, 1}, for characteristic
  /// 2 or 3, or when q != 1 mod 6.
  CurveXLambda(FieldPtr f, Elem lam);
  /// u(x) = x^4 (1-x)^3 (1 - lambda x).
  Elem u(Elem x) const;
};

struct CurveELambda {
  FieldPtr field;
  Elem lambda;
  /// Throws when the curve is singular (16 lambda^2 = 0) or char is 2 or 3.
  CurveELambda(FieldPtr f, Elem lam);
};

struct CurveCa {
  FieldPtr field;
  Elem a;
  CurveCa(FieldPtr f, Elem a_);
  /// f_a(P) = x^6 / a^2.
  Elem lambda_of(Elem x) const;
};

/// Unordered pair {t1, conj(t1)}.
struct TracePair {
  CycZ6 t1;
  CycZ6 t2;
  bool is_rational() const { return t1.is_rational() && t2.is_rational(); }
};
bool same_set(const TracePair& x, const TracePair& y);

struct ECount {
  long long count = 0;  // projective, point at infinity included
  long long a_E = 0;    // q + 1 - count
};
ECount count_E(const CurveELambda& curve);

/// Fiber-sum count of the smooth projective model: sum over x outside the
/// branch points of sum_j eta^j(u(x)), plus the points above the branch
/// points (2 over x = 0; 3 over x = 1 when 1 - lambda is a cube; 1 over
/// x = 1/lambda; 2 over infinity when lambda is a square).
long long count_X_smooth(const CurveXLambda& curve);

/// Points over the branch points of the smooth model.
long long branch_correction(const CurveXLambda& curve);

/// Independent count: literal affine y-loop (q <= naive_loop_limit) or an
/// Euler-criterion test per fiber, both on table-free arithmetic, plus the
/// same branch corrections.
long long count_X_naive(const CurveXLambda& curve, std::uint32_t naive_loop_limit = 101);

/// Unit multiplying the hypergeometric trace formula, as a power of zeta6.
/// Calibration over q in {7, 13, 19} returned 0; see calibrate_trace_unit().
inline constexpr int kTraceUnitExponent = 0;

/// {-eta(-1) q 2F1[eta,eta^2;eta^5|lambda], -eta^-1(-1) q 2F1[eta^-1,eta^-2;eta^-5|lambda]}
/// multiplied by zeta6^unit_exponent.
TracePair prym_trace_pair(const CurveXLambda& curve, int unit_exponent = kTraceUnitExponent);

struct TraceRow {
  std::uint32_t q = 0;
  Elem lambda = 0;
  long long count_X = 0;
  long long count_X_naive = -1;  // -1 when not computed
  long long a_E = 0;
  TracePair pair;
  bool additivity = false;  // q + 1 - #X = a_E + t1 + t2
  bool conjugate = false;   // t2 = conj(t1)
  bool weil = false;        // |t1| <= 2 sqrt q under both embeddings, |a_E| <= 2 sqrt q
  bool naive_agrees = true;
};
TraceRow verify_trace_row(const FieldPtr& field, Elem lambda, bool with_naive, int unit_exponent = kTraceUnitExponent);

/// Returns the unique zeta6 exponent u making additivity hold for every
/// lambda over every given field, or nullopt when none or several do.
std::optional<int> calibrate_trace_unit(const std::vector<FieldPtr>& fields);

/// Reciprocal roots of the degree-6 numerator of the zeta function of X_lambda
/// over F_p, reconstructed from counts over F_p, F_{p^2}, F_{p^3}.
struct ZetaNumerator {
  std::uint32_t q = 0;
  std::vector<long long> counts;        // N_1, N_2, N_3
  std::vector<long long> coefficients;  // 1, c1, ..., c6 of L(T) = prod (1 - alpha T)
  std::vector<std::complex<double>> roots;
  double max_modulus_error = 0;      // max | |alpha| - sqrt q |
  double functional_eq_error = 0;    // max distance from q/alpha to the root multiset
  bool integral = true;              // Newton-identity divisions were exact
};
/// lambda is given as an element of the prime field F_p (0 <= lambda < p).
ZetaNumerator zeta_numerator(std::uint32_t p, std::uint32_t lambda);

std::vector<std::pair<Elem, Elem>> enumerate_Ca_points(const CurveCa& curve);

struct SixthPowerReport {
  std::size_t points = 0;
  std::size_t checked = 0;           // xy != 0 and lambda not in {0, 1}
  std::size_t identity_failures = 0; // lambda ((1-lambda)/4)^2 != (xy/a)^6
  std::size_t eta_failures = 0;      // eta of it != 1
  std::size_t irrational_pairs = 0;  // trace pair with nonzero z6 coefficient
  bool ok() const { return identity_failures == 0 && eta_failures == 0 && irrational_pairs == 0; }
};
SixthPowerReport check_sixth_power_criterion(const CurveCa& curve);

struct CoverReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};
/// v^2 = 4u^6 + 1 at every point of C_1 with x != 0, u = y/x, v = x^3 + 2y^3/x^3.
CoverReport check_cover_identity(const FieldPtr& field);

}  // namespace prymcheck
