#include "prymcheck/characters.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace prymcheck {

namespace {

void require_same_field(const MultChar& x, const MultChar& y) {
  if (x.field() != y.field() && (x.field()->q() != y.field()->q() || x.field()->p() != y.field()->p()))
    throw std::invalid_argument("characters live on different fields");
}

}  // namespace

MultChar::MultChar(FieldPtr field, int order, int exponent)
    : field_(std::move(field)), order_(order), exponent_(0) {
  if (!field_) throw std::invalid_argument("character without a field");
  if (order_ <= 0 || 6 % order_ != 0) throw std::invalid_argument("character order must divide 6");
  if ((field_->q() - 1) % static_cast<std::uint32_t>(order_) != 0)
    throw std::invalid_argument("character order " + std::to_string(order_) + " does not divide q-1 for " +
                                field_->name());
  exponent_ = ((exponent % order_) + order_) % order_;
}

CycZ6 MultChar::value(FqField::Elem x) const {
  int k = value_exponent(x);
  return k < 0 ? CycZ6{} : root_of_unity(k);
}

MultChar operator*(const MultChar& x, const MultChar& y) {
  require_same_field(x, y);
  int m = std::lcm(x.order_, y.order_);
  int e = x.exponent_ * (m / x.order_) + y.exponent_ * (m / y.order_);
  return MultChar(x.field_, m, e);
}

MultChar MultChar::inverse() const { return MultChar(field_, order_, -exponent_); }

MultChar MultChar::pow(int n) const { return MultChar(field_, order_, exponent_ * n); }

bool operator==(const MultChar& x, const MultChar& y) {
  return x.field_->q() == y.field_->q() && x.sextic_exponent() == y.sextic_exponent();
}

MultChar sextic_char(const FieldPtr& field) {
  if (field->q() % 6 != 1) throw std::invalid_argument("sextic character needs q = 1 mod 6, got q = " + std::to_string(field->q()));
  return MultChar(field, 6, 1);
}

MultChar trivial_char(const FieldPtr& field) { return MultChar(field, 1, 0); }

MultChar quadratic_char(const FieldPtr& field) {
  if (field->p() == 2) throw std::invalid_argument("no quadratic character in characteristic 2");
  return MultChar(field, 2, 1);
}

CycZ6 jacobi_sum(const MultChar& chi, const MultChar& psi) {
  require_same_field(chi, psi);
  const FqField& F = *chi.field();
  const std::uint64_t s1 = static_cast<std::uint64_t>(chi.sextic_exponent());
  const std::uint64_t s2 = static_cast<std::uint64_t>(psi.sextic_exponent());
  std::array<long long, 6> cnt{};
  for (FqField::Elem x = 2; x < F.q(); ++x) {
    FqField::Elem y = F.sub(1, x);
    if (y == 0) continue;
    cnt[(F.dlog(x) * s1 + F.dlog(y) * s2) % 6] += 1;
  }
  return from_root_counts(cnt);
}

template <class Real>
ComplexT<Real> gauss_sum_t(const MultChar& chi) {
  using C = ComplexT<Real>;
  if (chi.is_trivial()) return C(Real(-1), Real(0));
  const FqField& F = *chi.field();
  const std::uint32_t p = F.p();
  // counts[k * p + t] = #{x != 0 : chi(x) = zeta6^k, Tr(x) = t}
  std::vector<long long> counts(6 * static_cast<std::size_t>(p), 0);
  for (FqField::Elem x = 1; x < F.q(); ++x)
    counts[static_cast<std::size_t>(chi.value_exponent(x)) * p + F.trace(x)] += 1;
  C total(Real(0), Real(0));
  for (int k = 0; k < 6; ++k) {
    C inner(Real(0), Real(0));
    for (std::uint32_t t = 0; t < p; ++t) {
      long long c = counts[static_cast<std::size_t>(k) * p + t];
      if (c != 0) inner += C(Real(c), Real(0)) * unit_root<Real>(t, p);
    }
    total += unit_root<Real>(k, 6) * inner;
  }
  return total;
}

template ComplexT<double> gauss_sum_t<double>(const MultChar&);
template ComplexT<Quad> gauss_sum_t<Quad>(const MultChar&);

std::complex<double> gauss_sum(const MultChar& chi, Precision prec) {
  if (prec == Precision::Quad) return to_cd<Quad>(gauss_sum_t<Quad>(chi));
  return gauss_sum_t<double>(chi);
}

CycQ6 fhyp_2f1(const MultChar& A, const MultChar& B, const MultChar& C, FqField::Elem x) {
  require_same_field(A, B);
  require_same_field(A, C);
  const FqField& F = *A.field();
  if (x == 0) return CycQ6{};
  const MultChar bc = B * C.inverse();
  const MultChar bbar_c = B.inverse() * C;
  const MultChar abar = A.inverse();
  const std::uint64_t sb = static_cast<std::uint64_t>(B.sextic_exponent());
  const std::uint64_t sbc = static_cast<std::uint64_t>(bbar_c.sextic_exponent());
  const std::uint64_t sa = static_cast<std::uint64_t>(abar.sextic_exponent());
  std::array<long long, 6> cnt{};
  for (FqField::Elem y = 1; y < F.q(); ++y) {
    FqField::Elem one_minus_y = F.sub(1, y);
    if (one_minus_y == 0) continue;
    FqField::Elem w = F.sub(1, F.mul(x, y));
    if (w == 0) continue;
    cnt[(F.dlog(y) * sb + F.dlog(one_minus_y) * sbc + F.dlog(w) * sa) % 6] += 1;
  }
  CycZ6 sum = from_root_counts(cnt) * bc.value(F.neg(1));
  return CycQ6(sum, BigInt(F.q()));
}

HasseDavenportReport check_hasse_davenport(const FieldPtr& field, Precision prec) {
  if (field->p() == 2) throw std::invalid_argument("Hasse-Davenport check needs odd characteristic");
  const MultChar eta = sextic_char(field);
  HasseDavenportReport r;
  r.q = field->q();
  r.j23 = jacobi_sum(eta.pow(2), eta.pow(3));
  r.j14 = jacobi_sum(eta, eta.pow(4));
  const FqField::Elem two = field->from_int(2);
  r.eta2_of_2 = eta.pow(2).value(two);
  r.exact_holds = r.j23 == r.eta2_of_2 * r.j14;

  const int s = eta.pow(-2).value_exponent(two);
  auto sides = [&]<class Real>() {
    using C = ComplexT<Real>;
    auto G = [&](int j) { return gauss_sum_t<Real>(eta.pow(j)); };
    const C lhs = G(1) * G(4);
    const C rhs = -unit_root<Real>(s, 6) * G(2) * G(0) * G(3);
    using std::abs;
    r.lhs = to_cd<Real>(lhs);
    r.rhs = to_cd<Real>(rhs);
    r.rel_error = static_cast<double>(abs(C(lhs - rhs)) / abs(lhs));
  };
  if (prec == Precision::Quad)
    sides.template operator()<Quad>();
  else
    sides.template operator()<double>();
  return r;
}

ReflectionReport check_prop9_reflection(const FieldPtr& field, FqField::Elem x) {
  if (x == 0 || x == 1) throw std::invalid_argument("reflection check needs x not in {0, 1}");
  const FqField& F = *field;
  const MultChar eta = sextic_char(field);
  ReflectionReport r;
  r.x = x;
  r.lhs = fhyp_2f1(eta, eta.pow(2), eta.pow(5), x);
  const CycQ6 mirrored = fhyp_2f1(eta.inverse(), eta.pow(-2), eta.pow(-5), x);

  const CycZ6 j23 = jacobi_sum(eta.pow(2), eta.pow(3));
  const CycZ6 j14 = jacobi_sum(eta, eta.pow(4));
  if (j14.is_zero()) throw std::logic_error("J(eta, eta^4) vanished; norm should be q");
  const FqField::Elem one_minus_x = F.sub(1, x);
  const CycQ6 ratio = CycQ6(j23) / CycQ6(j14);
  r.rhs_jacobi = CycQ6(eta.value(x) * eta.pow(2).value(one_minus_x)) * ratio * mirrored;
  r.reflection_holds = r.lhs == r.rhs_jacobi;

  const FqField::Elem quarter = F.inv(F.from_int(4));
  const FqField::Elem t = F.mul(one_minus_x, quarter);
  const FqField::Elem arg = F.mul(x, F.mul(t, t));
  r.rhs_sixth_power = CycQ6(eta.value(arg)) * mirrored;
  r.sixth_power_holds = r.lhs == r.rhs_sixth_power;
  return r;
}

}  // namespace prymcheck
