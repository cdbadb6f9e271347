// Finite local rings GR(l^m, f) = (Z/l^m)[a]/(g(a)) with g a monic lift of
// an irreducible polynomial of degree f over F_l.  This covers F_q (m = 1)
// and Z/l^m (f = 1).  Square matrices over them.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "prymcheck/ffield.hpp"

namespace prymcheck {

class FiniteLocalRing;
using RingPtr = std::shared_ptr<const FiniteLocalRing>;

class FiniteLocalRing {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kMaxSize = 1u << 20;

  static RingPtr make(std::uint32_t ell, std::uint32_t m, std::uint32_t f);
  /// "F_q", "F_p^k", "Z/N" (N a prime power) or "GR(N,f)".
  static RingPtr parse(std::string_view spec);

  std::uint32_t ell() const { return ell_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t f() const { return f_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t base() const { return base_; }  // l^m
  std::uint32_t residue_size() const { return residue_->q(); }
  bool is_field() const { return m_ == 1; }
  std::string name() const;
  const FieldPtr& residue_field() const { return residue_; }
  /// (l^f - 1) l^(f(m-1))
  std::uint64_t unit_count() const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const { return sub(0, x); }
  Elem mul(Elem x, Elem y) const;
  Elem pow(Elem x, std::uint64_t e) const;
  bool is_unit(Elem x) const { return reduce(x) != 0; }
  /// Throws std::domain_error on non-units.
  Elem inv(Elem x) const;
  /// l-adic valuation in [0, m]; m for zero.
  std::uint32_t valuation(Elem x) const;
  /// y with l^v y = x, for valuation(x) >= v.
  Elem divide_by_ell_power(Elem x, std::uint32_t v) const;
  /// l^v as a ring element.
  Elem ell_power(std::uint32_t v) const;
  /// Image in the residue field, encoded as in FqField.
  FqField::Elem reduce(Elem x) const;
  Elem from_int(long long n) const;

  /// Polynomial in "a" with coefficients in [0, l^m), e.g. "2*a+3"; integers for f = 1.
  std::string format(Elem x) const;
  /// Inverse of format(); also accepts signed integers and "-a" style terms.
  Elem parse_elem(std::string_view s) const;

 private:
  FiniteLocalRing() = default;
  Elem mul_poly(Elem x, Elem y) const;
  std::vector<std::uint32_t> digits(Elem x) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  std::uint32_t ell_ = 0, m_ = 0, f_ = 0, base_ = 0, size_ = 0;
  FieldPtr residue_;
  std::vector<std::uint32_t> modulus_;  // monic lift, constant term first, length f+1
  std::vector<Elem> mul_table_;          // size <= 1024 only
  std::vector<Elem> inv_table_;
};

struct RingMatrix {
  int d = 0;
  std::vector<FiniteLocalRing::Elem> e;  // row-major

  RingMatrix() = default;
  explicit RingMatrix(int dim) : d(dim), e(static_cast<std::size_t>(dim * dim), 0) {}
  FiniteLocalRing::Elem& operator()(int i, int j) { return e[static_cast<std::size_t>(i * d + j)]; }
  FiniteLocalRing::Elem operator()(int i, int j) const { return e[static_cast<std::size_t>(i * d + j)]; }
  friend bool operator==(const RingMatrix& x, const RingMatrix& y) { return x.d == y.d && x.e == y.e; }
  friend bool operator!=(const RingMatrix& x, const RingMatrix& y) { return !(x == y); }
};

struct RingMatrixHash {
  std::size_t operator()(const RingMatrix& A) const {
    std::size_t h = static_cast<std::size_t>(A.d);
    for (auto x : A.e) h = h * 1000003u ^ (x + 0x9e3779b9u + (h << 6) + (h >> 2));
    return h;
  }
};

RingMatrix identity_matrix(int d);
RingMatrix scalar_matrix(const FiniteLocalRing& R, int d, FiniteLocalRing::Elem s);
RingMatrix mat_mul(const FiniteLocalRing& R, const RingMatrix& A, const RingMatrix& B);
RingMatrix mat_scale(const FiniteLocalRing& R, const RingMatrix& A, FiniteLocalRing::Elem s);
FiniteLocalRing::Elem mat_trace(const FiniteLocalRing& R, const RingMatrix& A);
FiniteLocalRing::Elem mat_det(const FiniteLocalRing& R, const RingMatrix& A);
/// Throws std::domain_error if A is not invertible.
RingMatrix mat_inverse(const FiniteLocalRing& R, const RingMatrix& A);
RingMatrix mat_transpose(const RingMatrix& A);
RingMatrix block_diagonal(const RingMatrix& A, const RingMatrix& B);
RingMatrix block(const RingMatrix& A, int offset, int d);
bool is_scalar(const RingMatrix& A);
std::string format_matrix(const FiniteLocalRing& R, const RingMatrix& A);

}  // namespace prymcheck
