// Scalar plumbing shared by the floating-point modules.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace prymcheck {

using Quad = boost::multiprecision::cpp_bin_float_quad;

/// Raised when no evaluation strategy converges for the requested input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Real>
struct ComplexOf {
  using type = std::complex<Real>;
};
template <>
struct ComplexOf<Quad> {
  using type = boost::multiprecision::cpp_complex_quad;
};
template <class Real>
using ComplexT = typename ComplexOf<Real>::type;

/// Working precision selector for the public double-valued entry points.
enum class Precision { Double = 53, Quad = 113 };

inline Precision precision_from_bits(int bits) {
  if (bits == 53) return Precision::Double;
  if (bits == 113 || bits == 128) return Precision::Quad;
  throw std::invalid_argument("unsupported precision " + std::to_string(bits) + " (use 53 or 113)");
}

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
std::complex<double> to_cd(const ComplexT<Real>& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <class Real>
ComplexT<Real> from_cd(std::complex<double> z) {
  return ComplexT<Real>(Real(z.real()), Real(z.imag()));
}

/// exp(2 pi i x) for rational x = num/den.
template <class Real>
ComplexT<Real> unit_root(long long num, long long den) {
  using std::cos;
  using std::sin;
  Real t = 2 * pi<Real>() * Real(num) / Real(den);
  return ComplexT<Real>(cos(t), sin(t));
}

}  // namespace prymcheck
