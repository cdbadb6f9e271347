// Effective isogeny and height bounds, kept in log scale so astronomically
// large constants never overflow.
#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace prymcheck {

using HighReal = boost::multiprecision::cpp_bin_float_50;

/// Level 0 stores log10(x); level 1 stores log10(log10(x)).
class LogScale {
 public:
  LogScale() = default;
  static LogScale from_double(double x);
  static LogScale from_log10(const HighReal& l);
  static LogScale from_loglog10(const HighReal& ll);

  int level() const { return level_; }
  const HighReal& value() const { return value_; }

  /// log10(x); throws std::domain_error at level 1.
  HighReal log10() const;
  /// Natural log of x; level 0 only.
  HighReal ln() const;
  /// x itself; throws std::overflow_error beyond double range.
  double to_double() const;
  /// Same number at level 1; requires x > 10.
  LogScale promoted() const;

  friend LogScale operator*(const LogScale& x, const LogScale& y);
  /// Level 0 only, via log-sum-exp.
  friend LogScale operator+(const LogScale& x, const LogScale& y);
  LogScale pow(const HighReal& e) const;

  friend int compare(const LogScale& x, const LogScale& y);
  friend bool operator<(const LogScale& x, const LogScale& y) { return compare(x, y) < 0; }
  friend bool operator==(const LogScale& x, const LogScale& y) { return compare(x, y) == 0; }

  std::string to_string() const;

 private:
  int level_ = 0;
  HighReal value_ = 0;
};

/// log10 kappa = 2^10 g^3 (64 g^2 log10(14 g) + log10 degK + 2 log10 max(h, ln degK, 1)).
LogScale kappa_log(int g, long long degK, double h);

/// |h(A') - h(A)| <= (1/2) ln kappa.  Rejects level-1 input.
HighReal height_diff_bound(const LogScale& kappa);

/// h(A) >= -(ln(2 pi^2)/2) dim A.
double bost_lower(int dim);

/// h_B + (1/2) ln kappa(dim_B, degK, h_B) + (ln(2 pi^2)/2) dim_B.
HighReal isogeny_factor_height_bound(int g, long long degK, double h_B, int dim_B);

/// log10(n!) by Stirling with the 1/(12n) term; error_bound receives a
/// bound on the truncation error of the log10 value.
HighReal log10_factorial(const HighReal& n, HighReal* error_bound = nullptr);

struct SnowdenConstant {
  LogScale value;          // level 0 if S is empty, level 1 otherwise
  HighReal log10_base_factorial;   // log10((10^10)!)
  HighReal log10_exponent_factorial;  // log10((10^10 degK)!)
  HighReal stirling_error;
};
/// log10 N = log10((10^10)!) + (10^10 degK)! sum_{q in S} log10 Nm q.
SnowdenConstant snowden_constant_log(long long degK, const std::vector<long long>& S_norms);

}  // namespace prymcheck
