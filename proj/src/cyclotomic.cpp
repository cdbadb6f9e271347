#include "prymcheck/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace prymcheck {

namespace {

const std::array<CycZ6, 6>& roots_table() {
  static const std::array<CycZ6, 6> t = {
      CycZ6{1, 0}, CycZ6{0, 1}, CycZ6{-1, 1}, CycZ6{-1, 0}, CycZ6{0, -1}, CycZ6{1, -1},
  };
  return t;
}

BigInt parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad integer: " + std::string(s));
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

CycZ6 root_of_unity(long long k) {
  long long r = ((k % 6) + 6) % 6;
  return roots_table()[static_cast<std::size_t>(r)];
}

CycZ6 from_root_counts(const std::array<long long, 6>& c) {
  // z^2 = -1 + z, z^3 = -1, z^4 = -z, z^5 = 1 - z
  long long a = c[0] - c[2] - c[3] + c[5];
  long long b = c[1] + c[2] - c[4] - c[5];
  return {BigInt(a), BigInt(b)};
}

std::complex<double> embed(const CycZ6& x) {
  const std::complex<double> z(0.5, std::sqrt(3.0) / 2.0);
  return x.a.convert_to<double>() + x.b.convert_to<double>() * z;
}

int root_exponent(const CycZ6& x) {
  const auto& t = roots_table();
  for (int k = 0; k < 6; ++k)
    if (t[static_cast<std::size_t>(k)] == x) return k;
  return -1;
}

std::string to_string(const CycZ6& x) {
  std::ostringstream os;
  os << x.a;
  if (x.b < 0)
    os << '-' << BigInt(-x.b) << "*z6";
  else
    os << '+' << x.b << "*z6";
  return os.str();
}

CycZ6 parse_cyc(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const std::string suffix = "*z6";
  if (s.size() < suffix.size() || s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0)
    return {parse_int(s), BigInt(0)};
  std::string body = s.substr(0, s.size() - suffix.size());
  // split at the last sign that is not the leading one
  std::size_t cut = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      cut = i;
      break;
    }
  }
  if (cut == std::string::npos) throw std::invalid_argument("bad Z[z6] literal: " + std::string(text));
  BigInt a = parse_int(body.substr(0, cut));
  std::string bs = body.substr(cut);
  if (bs.size() > 1 && bs[0] == '+' && bs[1] == '-') bs = bs.substr(1);
  return {a, parse_int(bs)};
}

std::ostream& operator<<(std::ostream& os, const CycZ6& x) { return os << to_string(x); }

CycQ6::CycQ6(CycZ6 n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("CycQ6 with zero denominator");
  normalize();
}

void CycQ6::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  BigInt g = gcd(gcd(abs(num_.a), abs(num_.b)), den_);
  if (g > 1) {
    num_.a /= g;
    num_.b /= g;
    den_ /= g;
  }
}

CycQ6 operator+(const CycQ6& x, const CycQ6& y) {
  return CycQ6(x.num_ * CycZ6(y.den_, 0) + y.num_ * CycZ6(x.den_, 0), x.den_ * y.den_);
}

CycQ6 operator-(const CycQ6& x, const CycQ6& y) {
  return CycQ6(x.num_ * CycZ6(y.den_, 0) - y.num_ * CycZ6(x.den_, 0), x.den_ * y.den_);
}

CycQ6 operator*(const CycQ6& x, const CycQ6& y) { return CycQ6(x.num_ * y.num_, x.den_ * y.den_); }

CycQ6 operator/(const CycQ6& x, const CycQ6& y) {
  if (y.is_zero()) throw std::domain_error("division by zero in Q(zeta6)");
  // x / y = x * conj(y) / N(y)
  BigInt n = norm(y.num_);
  return CycQ6(x.num_ * conj(y.num_) * CycZ6(y.den_, 0), x.den_ * n);
}

std::complex<double> CycQ6::embed() const {
  return prymcheck::embed(num_) / den_.convert_to<double>();
}

std::string to_string(const CycQ6& x) {
  if (x.is_integral()) return to_string(x.num());
  std::ostringstream os;
  os << '(' << to_string(x.num()) << ")/" << x.den();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycQ6& x) { return os << to_string(x); }

}  // namespace prymcheck
