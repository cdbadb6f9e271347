// Finite fields F_q, q = p^k, with discrete-log tables.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace prymcheck {

/// Elements are encoded as integers in [0, q): the base-p digits are the
/// coefficients (constant term first) of a polynomial reduced modulo the
/// field's defining polynomial.  0 and 1 encode zero and one, and the prime
/// field F_p sits inside as the encodings [0, p).
class FqField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = 1'000'000;

  /// Throws std::invalid_argument if p is not prime or q exceeds the cap.
  static std::shared_ptr<const FqField> make(std::uint32_t p, std::uint32_t k = 1,
                                             std::uint64_t max_order = kMaxOrder);
  /// Parses "p" or "p^k".
  static std::shared_ptr<const FqField> parse(std::string_view spec);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  std::string name() const;
  /// Monic defining polynomial, constant term first; {0, 1} for k = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return gen_; }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const { return sub(0, x); }
  Elem mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    std::uint64_t e = std::uint64_t(log_[x]) + log_[y];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  /// Throws std::domain_error for x = 0.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, long long e) const;

  /// Multiplication by schoolbook polynomial arithmetic, no tables.  Used as
  /// an independent path by the naive point counts.
  Elem mul_poly(Elem x, Elem y) const;
  Elem pow_poly(Elem x, std::uint64_t e) const;

  /// Discrete log to the base generator(); x must be nonzero.
  std::uint32_t dlog(Elem x) const { return log_[x]; }
  Elem exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

  /// Image of the integer n under Z -> F_p -> F_q.
  Elem from_int(long long n) const;
  /// Absolute trace to F_p, returned as an integer in [0, p).
  std::uint32_t trace(Elem x) const { return trace_[x]; }

  bool is_square(Elem x) const { return x != 0 && log_[x] % 2 == 0; }
  /// True iff x = y^n for some y in F_q; zero counts as an n-th power.
  bool is_nth_power(Elem x, std::uint32_t n) const;

  std::string format(Elem x) const;

 private:
  FqField() = default;
  void build();

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem gen_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> trace_;
  std::vector<std::uint32_t> pw_;  // p^i
};

using FieldPtr = std::shared_ptr<const FqField>;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace prymcheck
