#include "prymcheck/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace prymcheck {

namespace {

const HighReal& ln10() {
  static const HighReal v = boost::multiprecision::log(HighReal(10));
  return v;
}

HighReal hlog10(const HighReal& x) { return boost::multiprecision::log10(x); }

// log10(10^a + 10^b)
HighReal log10_sum(const HighReal& a, const HighReal& b) {
  const HighReal hi = std::max(a, b), lo = std::min(a, b);
  const HighReal gap = lo - hi;
  if (gap < -60) return hi;
  return hi + hlog10(1 + boost::multiprecision::pow(HighReal(10), gap));
}

}  // namespace

LogScale LogScale::from_double(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw std::domain_error("LogScale needs a positive finite value");
  return from_log10(hlog10(HighReal(x)));
}

LogScale LogScale::from_log10(const HighReal& l) {
  LogScale s;
  s.level_ = 0;
  s.value_ = l;
  return s;
}

LogScale LogScale::from_loglog10(const HighReal& ll) {
  LogScale s;
  s.level_ = 1;
  s.value_ = ll;
  return s;
}

HighReal LogScale::log10() const {
  if (level_ != 0) throw std::domain_error("log10 of a level-1 LogScale is not representable");
  return value_;
}

HighReal LogScale::ln() const { return log10() * ln10(); }

double LogScale::to_double() const {
  const HighReal l = log10();
  if (l > 308.25 || l < -323) throw std::overflow_error("LogScale value outside double range");
  return static_cast<double>(boost::multiprecision::pow(HighReal(10), l));
}

LogScale LogScale::promoted() const {
  if (level_ == 1) return *this;
  if (value_ <= 0) throw std::domain_error("only values above 1 can be promoted to level 1");
  return from_loglog10(hlog10(value_));
}

LogScale operator*(const LogScale& x, const LogScale& y) {
  if (x.level_ == 0 && y.level_ == 0) return LogScale::from_log10(x.value_ + y.value_);
  if (x.level_ == 1 && y.level_ == 1) {
    // log10 x + log10 y = 10^u + 10^v, both positive
    return LogScale::from_loglog10(log10_sum(x.value_, y.value_));
  }
  const LogScale& big = x.level_ == 1 ? x : y;
  const LogScale& small = x.level_ == 1 ? y : x;
  // log10(xy) = 10^v + a
  if (big.value_ > 1000) return big;
  const HighReal total = boost::multiprecision::pow(HighReal(10), big.value_) + small.value_;
  if (total <= 0) return LogScale::from_log10(total);
  return LogScale::from_loglog10(hlog10(total));
}

LogScale operator+(const LogScale& x, const LogScale& y) {
  if (x.level_ != 0 || y.level_ != 0) throw std::domain_error("addition is defined for level-0 LogScale only");
  return LogScale::from_log10(log10_sum(x.value_, y.value_));
}

LogScale LogScale::pow(const HighReal& e) const {
  if (level_ == 0) return from_log10(value_ * e);
  if (e <= 0) throw std::domain_error("level-1 LogScale powers need a positive exponent");
  return from_loglog10(value_ + hlog10(e));
}

int compare(const LogScale& x, const LogScale& y) {
  auto cmp = [](const HighReal& a, const HighReal& b) { return a < b ? -1 : (b < a ? 1 : 0); };
  if (x.level_ == y.level_) return cmp(x.value_, y.value_);
  if (x.level_ == 0) {
    if (x.value_ <= 0) return -1;
    return cmp(hlog10(x.value_), y.value_);
  }
  if (y.value_ <= 0) return 1;
  return cmp(x.value_, hlog10(y.value_));
}

std::string LogScale::to_string() const {
  std::ostringstream os;
  os.precision(12);
  os << (level_ == 0 ? "10^(" : "10^10^(") << value_ << ")";
  return os.str();
}

LogScale kappa_log(int g, long long degK, double h) {
  if (g < 1) throw std::invalid_argument("kappa needs g >= 1");
  if (degK < 1) throw std::invalid_argument("kappa needs [K:Q] >= 1");
  const HighReal G(g);
  const HighReal lnd = boost::multiprecision::log(HighReal(degK));
  const HighReal m = std::max({HighReal(h), lnd, HighReal(1)});
  const HighReal inner = 64 * G * G * hlog10(14 * G) + hlog10(HighReal(degK)) + 2 * hlog10(m);
  return LogScale::from_log10(1024 * G * G * G * inner);
}

HighReal height_diff_bound(const LogScale& kappa) {
  if (kappa.level() != 0) throw std::domain_error("height difference bound expects a level-0 kappa");
  return kappa.ln() / 2;
}

double bost_lower(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  const double pi = boost::math::constants::pi<double>();
  return -std::log(2 * pi * pi) / 2 * dim;
}

HighReal isogeny_factor_height_bound(int g, long long degK, double h_B, int dim_B) {
  if (dim_B < 1 || dim_B > g) throw std::invalid_argument("need 1 <= dim_B <= g");
  const HighReal pi = boost::math::constants::pi<HighReal>();
  return HighReal(h_B) + height_diff_bound(kappa_log(dim_B, degK, h_B)) +
         boost::multiprecision::log(2 * pi * pi) / 2 * dim_B;
}

HighReal log10_factorial(const HighReal& n, HighReal* error_bound) {
  if (n < 1) {
    if (error_bound) *error_bound = 0;
    return 0;
  }
  using boost::multiprecision::log;
  const HighReal pi = boost::math::constants::pi<HighReal>();
  const HighReal ln_fact = n * log(n) - n + log(2 * pi * n) / 2 + 1 / (12 * n);
  if (error_bound) *error_bound = 1 / (360 * n * n * n) / ln10();
  return ln_fact / ln10();
}

SnowdenConstant snowden_constant_log(long long degK, const std::vector<long long>& S_norms) {
  if (degK < 1) throw std::invalid_argument("[K:Q] must be positive");
  for (long long n : S_norms)
    if (n < 2) throw std::invalid_argument("prime norms must be at least 2");
  SnowdenConstant out;
  const HighReal base(1e10);
  HighReal e1 = 0, e2 = 0;
  out.log10_base_factorial = log10_factorial(base, &e1);
  out.log10_exponent_factorial = log10_factorial(base * degK, &e2);
  out.stirling_error = e1 + e2;
  if (S_norms.empty()) {
    out.value = LogScale::from_log10(out.log10_base_factorial);
    return out;
  }
  HighReal sum = 0;
  for (long long n : S_norms) sum += hlog10(HighReal(n));
  // log10 log10 N = log10(10^L * sum + A) with L the exponent factorial and A the base factorial term
  const HighReal L = out.log10_exponent_factorial + hlog10(sum);
  out.value = LogScale::from_loglog10(log10_sum(L, hlog10(out.log10_base_factorial)));
  return out;
}

}  // namespace prymcheck
