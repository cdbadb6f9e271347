// Multiplicative characters of order dividing 6, Jacobi and Gauss sums, the
// finite-field 2F1, and the exact identities relating them.
#pragma once

#include <complex>
#include <cstdint>

#include "prymcheck/cyclotomic.hpp"
#include "prymcheck/ffield.hpp"
#include "prymcheck/numeric.hpp"

namespace prymcheck {

/// x -> zeta_m^(e * dlog x), with m | 6 and m | q - 1.  chi(0) = 0 for every
/// character, the trivial one included.
class MultChar {
 public:
  MultChar(FieldPtr field, int order, int exponent);

  const FieldPtr& field() const { return field_; }
  int order() const { return order_; }
  int exponent() const { return exponent_; }
  /// Exponent s in [0,6) with the value zeta6^s as a character of order dividing 6.
  int sextic_exponent() const { return (exponent_ * (6 / order_)) % 6; }
  bool is_trivial() const { return exponent_ == 0; }

  /// chi(x) = zeta6^k for the returned k, or -1 if x = 0.
  int value_exponent(FqField::Elem x) const {
    if (x == 0) return -1;
    return static_cast<int>((static_cast<std::uint64_t>(field_->dlog(x)) * sextic_exponent()) % 6);
  }
  CycZ6 value(FqField::Elem x) const;

  friend MultChar operator*(const MultChar& x, const MultChar& y);
  MultChar inverse() const;
  MultChar pow(int n) const;
  friend bool operator==(const MultChar& x, const MultChar& y);

 private:
  FieldPtr field_;
  int order_;
  int exponent_;
};

/// Character of exact order 6 with eta(g) = zeta6 for the field generator g.
/// Throws std::invalid_argument unless q = 1 mod 6.
MultChar sextic_char(const FieldPtr& field);
MultChar trivial_char(const FieldPtr& field);
/// Quadratic character; any odd q.
MultChar quadratic_char(const FieldPtr& field);

/// J(chi, psi) = sum_x chi(x) psi(1 - x).  Throws on field mismatch.
CycZ6 jacobi_sum(const MultChar& chi, const MultChar& psi);

/// G(chi) = sum_x chi(x) exp(2 pi i Tr(x) / p); G(triv) = -1 exactly.
template <class Real>
ComplexT<Real> gauss_sum_t(const MultChar& chi);
std::complex<double> gauss_sum(const MultChar& chi, Precision prec = Precision::Double);

/// Greene's finite-field hypergeometric function
///   2F1[A,B;C|x] = eps(x) BC^-1(-1)/q sum_y B(y) B^-1C(1-y) A^-1(1-xy).
CycQ6 fhyp_2f1(const MultChar& A, const MultChar& B, const MultChar& C, FqField::Elem x);

struct HasseDavenportReport {
  std::uint32_t q = 0;
  CycZ6 j23;            // J(eta^2, eta^3)
  CycZ6 j14;            // J(eta, eta^4)
  CycZ6 eta2_of_2;      // eta^2(2)
  bool exact_holds = false;  // J(eta^2,eta^3) = eta^2(2) J(eta,eta^4)
  std::complex<double> lhs;  // G(eta) G(eta^4)
  std::complex<double> rhs;  // -eta^-2(2) G(eta^2) G(triv) G(eta^3)
  double rel_error = 0;
};

/// Requires q = 1 mod 6 and odd characteristic.
HasseDavenportReport check_hasse_davenport(const FieldPtr& field, Precision prec = Precision::Double);

struct ReflectionReport {
  FqField::Elem x = 0;
  CycQ6 lhs;              // 2F1[eta, eta^2; eta^5 | x]
  CycQ6 rhs_jacobi;       // eta(x) eta^2(1-x) J(eta^2,eta^3)/J(eta,eta^4) 2F1[eta^-1, eta^-2; eta^-5 | x]
  CycQ6 rhs_sixth_power;  // eta(x ((1-x)/4)^2) 2F1[eta^-1, eta^-2; eta^-5 | x]
  bool reflection_holds = false;
  bool sixth_power_holds = false;
};

/// x must not be 0 or 1.
ReflectionReport check_prop9_reflection(const FieldPtr& field, FqField::Elem x);

}  // namespace prymcheck
