// Exact arithmetic in Z[zeta6] and Q(zeta6).
//
// Elements are stored in the power basis {1, z} with z = exp(pi i / 3), so
// z^2 = z - 1, z^3 = -1 and zeta3 = z^2 = z - 1.  Coefficients are
// arbitrary-precision integers by default; the template parameter exists so
// the same code runs on machine integers inside hot loops.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace prymcheck {

using BigInt = boost::multiprecision::cpp_int;

template <class Int>
struct CycZ6T {
  Int a{0};
  Int b{0};

  CycZ6T() = default;
  CycZ6T(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  CycZ6T(long long r) : a(r), b(0) {}

  static CycZ6T zeta() { return {Int(0), Int(1)}; }

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  friend bool operator==(const CycZ6T& x, const CycZ6T& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const CycZ6T& x, const CycZ6T& y) { return !(x == y); }

  friend CycZ6T operator+(const CycZ6T& x, const CycZ6T& y) { return {x.a + y.a, x.b + y.b}; }
  friend CycZ6T operator-(const CycZ6T& x, const CycZ6T& y) { return {x.a - y.a, x.b - y.b}; }
  friend CycZ6T operator-(const CycZ6T& x) { return {-x.a, -x.b}; }
  // (a1 + b1 z)(a2 + b2 z) with z^2 = z - 1.
  friend CycZ6T operator*(const CycZ6T& x, const CycZ6T& y) {
    Int bb = x.b * y.b;
    return {x.a * y.a - bb, x.a * y.b + x.b * y.a + bb};
  }
  CycZ6T& operator+=(const CycZ6T& y) { return *this = *this + y; }
  CycZ6T& operator-=(const CycZ6T& y) { return *this = *this - y; }
  CycZ6T& operator*=(const CycZ6T& y) { return *this = *this * y; }
};

using CycZ6 = CycZ6T<BigInt>;

/// Complex conjugation z -> 1 - z.
template <class Int>
CycZ6T<Int> conj(const CycZ6T<Int>& x) {
  return {x.a + x.b, -x.b};
}

/// x * conj(x) = a^2 + ab + b^2.
template <class Int>
Int norm(const CycZ6T<Int>& x) {
  return x.a * x.a + x.a * x.b + x.b * x.b;
}

/// z^k for any integer k.
CycZ6 root_of_unity(long long k);

/// Sum_k counts[k] * z^k, the usual way character sums are accumulated.
CycZ6 from_root_counts(const std::array<long long, 6>& counts);

/// Embedding z -> exp(pi i / 3) at double precision.
std::complex<double> embed(const CycZ6& x);

/// If x is a root of unity, its exponent in [0,6); otherwise -1.
int root_exponent(const CycZ6& x);

/// "a+b*z6" / "a-b*z6"; parse() also accepts plain integers.
std::string to_string(const CycZ6& x);
CycZ6 parse_cyc(std::string_view text);

std::ostream& operator<<(std::ostream& os, const CycZ6& x);

/// Element of Q(zeta6) as num/den with den > 0 and gcd(num.a, num.b, den) = 1.
class CycQ6 {
 public:
  CycQ6() : num_(), den_(1) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  CycQ6(CycZ6 n) : num_(std::move(n)), den_(1) {}
  CycQ6(CycZ6 n, BigInt d);

  const CycZ6& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integral() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const CycQ6& x, const CycQ6& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  friend bool operator!=(const CycQ6& x, const CycQ6& y) { return !(x == y); }
  friend CycQ6 operator+(const CycQ6& x, const CycQ6& y);
  friend CycQ6 operator-(const CycQ6& x, const CycQ6& y);
  friend CycQ6 operator*(const CycQ6& x, const CycQ6& y);
  /// Throws std::domain_error on division by zero.
  friend CycQ6 operator/(const CycQ6& x, const CycQ6& y);

  friend CycQ6 conj(const CycQ6& x) { return CycQ6(conj(x.num_), x.den_); }
  std::complex<double> embed() const;

 private:
  void normalize();
  CycZ6 num_;
  BigInt den_;
};

std::string to_string(const CycQ6& x);
std::ostream& operator<<(std::ostream& os, const CycQ6& x);

}  // namespace prymcheck
