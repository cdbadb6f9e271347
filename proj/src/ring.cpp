#include "prymcheck/ring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace prymcheck {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// n = l^m with l prime, or nothing.
bool prime_power(std::uint64_t n, std::uint32_t& ell, std::uint32_t& m) {
  if (n < 2) return false;
  auto pf = prime_factors(n);
  if (pf.size() != 1) return false;
  ell = static_cast<std::uint32_t>(pf[0]);
  m = 0;
  while (n % ell == 0) {
    n /= ell;
    ++m;
  }
  return true;
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

RingPtr FiniteLocalRing::make(std::uint32_t ell, std::uint32_t m, std::uint32_t f) {
  if (!is_prime(ell)) throw std::invalid_argument("ring characteristic base " + std::to_string(ell) + " is not prime");
  if (m < 1 || f < 1) throw std::invalid_argument("ring exponents must be positive");
  const std::uint64_t base = ipow(ell, m);
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    size *= base;
    if (size > kMaxSize) throw std::invalid_argument("ring too large");
  }
  auto R = std::shared_ptr<FiniteLocalRing>(new FiniteLocalRing());
  R->ell_ = ell;
  R->m_ = m;
  R->f_ = f;
  R->base_ = static_cast<std::uint32_t>(base);
  R->size_ = static_cast<std::uint32_t>(size);
  R->residue_ = FqField::make(ell, f);
  R->modulus_ = R->residue_->modulus();  // coefficients in [0, l) lift to Z/l^m
  if (R->modulus_.size() != f + 1) R->modulus_ = {0, 1};
  if (!R->is_field() && size <= 1024) {
    R->mul_table_.resize(static_cast<std::size_t>(size * size));
    for (Elem x = 0; x < size; ++x)
      for (Elem y = 0; y < size; ++y) R->mul_table_[static_cast<std::size_t>(x) * size + y] = R->mul_poly(x, y);
  }
  if (!R->is_field() && size <= 65536) {
    R->inv_table_.assign(size, 0);
    const std::uint64_t u = R->unit_count();
    for (Elem x = 1; x < size; ++x)
      if (R->is_unit(x)) R->inv_table_[x] = R->pow(x, u - 1);
  }
  return R;
}

RingPtr FiniteLocalRing::parse(std::string_view spec_in) {
  const std::string spec = trim(spec_in);
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad ring spec '" + spec + "'");
    return std::stoull(s);
  };
  std::uint32_t ell = 0, m = 0;
  if (spec.rfind("F_", 0) == 0 || spec.rfind("F", 0) == 0) {
    std::string rest = spec.substr(spec[1] == '_' ? 2 : 1);
    std::uint64_t q;
    if (auto caret = rest.find('^'); caret != std::string::npos) {
      q = ipow(number(rest.substr(0, caret)), static_cast<std::uint32_t>(number(rest.substr(caret + 1))));
    } else {
      q = number(rest);
    }
    if (!prime_power(q, ell, m)) throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
    return make(ell, 1, m);
  }
  if (spec.rfind("Z/", 0) == 0) {
    const std::uint64_t n = number(spec.substr(2));
    if (!prime_power(n, ell, m)) throw std::invalid_argument("Z/N needs N a prime power, got " + std::to_string(n));
    return make(ell, m, 1);
  }
  if (spec.rfind("GR(", 0) == 0 && spec.back() == ')') {
    const std::string inner = spec.substr(3, spec.size() - 4);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad ring spec '" + spec + "'");
    const std::uint64_t n = number(inner.substr(0, comma));
    if (!prime_power(n, ell, m)) throw std::invalid_argument("GR(N,f) needs N a prime power");
    return make(ell, m, static_cast<std::uint32_t>(number(inner.substr(comma + 1))));
  }
  throw std::invalid_argument("unknown ring spec '" + spec + "' (use F_q, Z/N or GR(N,f))");
}

std::string FiniteLocalRing::name() const {
  if (m_ == 1) return "F_" + std::to_string(size_);
  if (f_ == 1) return "Z/" + std::to_string(base_);
  return "GR(" + std::to_string(base_) + "," + std::to_string(f_) + ")";
}

std::uint64_t FiniteLocalRing::unit_count() const {
  return (ipow(ell_, f_) - 1) * ipow(ell_, f_ * (m_ - 1));
}

std::vector<std::uint32_t> FiniteLocalRing::digits(Elem x) const {
  std::vector<std::uint32_t> d(f_);
  for (std::uint32_t i = 0; i < f_; ++i) {
    d[i] = x % base_;
    x /= base_;
  }
  return d;
}

FiniteLocalRing::Elem FiniteLocalRing::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem x = 0;
  for (std::uint32_t i = f_; i-- > 0;) x = x * base_ + d[i];
  return x;
}

FiniteLocalRing::Elem FiniteLocalRing::add(Elem x, Elem y) const {
  if (f_ == 1) return (x + y) % base_;
  Elem r = 0, w = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    r += ((x % base_ + y % base_) % base_) * w;
    x /= base_;
    y /= base_;
    w *= base_;
  }
  return r;
}

FiniteLocalRing::Elem FiniteLocalRing::sub(Elem x, Elem y) const {
  if (f_ == 1) return (x + base_ - y) % base_;
  Elem r = 0, w = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    r += ((x % base_ + base_ - y % base_) % base_) * w;
    x /= base_;
    y /= base_;
    w *= base_;
  }
  return r;
}

FiniteLocalRing::Elem FiniteLocalRing::mul_poly(Elem x, Elem y) const {
  if (f_ == 1) return static_cast<Elem>((std::uint64_t(x) * y) % base_);
  const auto dx = digits(x), dy = digits(y);
  std::vector<std::uint64_t> prod(2 * f_ - 1, 0);
  for (std::uint32_t i = 0; i < f_; ++i)
    for (std::uint32_t j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(dx[i]) * dy[j]) % base_;
  for (std::uint32_t i = 2 * f_ - 1; i-- > f_;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < f_; ++j)
      prod[i - f_ + j] = (prod[i - f_ + j] + base_ - (c * modulus_[j]) % base_) % base_;
  }
  std::vector<std::uint32_t> d(f_);
  for (std::uint32_t i = 0; i < f_; ++i) d[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(d);
}

FiniteLocalRing::Elem FiniteLocalRing::mul(Elem x, Elem y) const {
  if (m_ == 1) return residue_->mul(x, y);
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(x) * size_ + y];
  return mul_poly(x, y);
}

FiniteLocalRing::Elem FiniteLocalRing::pow(Elem x, std::uint64_t e) const {
  Elem r = from_int(1);
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

FiniteLocalRing::Elem FiniteLocalRing::inv(Elem x) const {
  if (!is_unit(x)) throw std::domain_error(format(x) + " is not a unit in " + name());
  if (m_ == 1) return residue_->inv(x);
  if (!inv_table_.empty()) return inv_table_[x];
  return pow(x, unit_count() - 1);
}

std::uint32_t FiniteLocalRing::valuation(Elem x) const {
  std::uint32_t v = m_;
  for (auto d : digits(x)) {
    if (d == 0) continue;
    std::uint32_t k = 0;
    while (d % ell_ == 0) {
      d /= ell_;
      ++k;
    }
    v = std::min(v, k);
  }
  return v;
}

FiniteLocalRing::Elem FiniteLocalRing::divide_by_ell_power(Elem x, std::uint32_t v) const {
  if (valuation(x) < v) throw std::domain_error("element not divisible by the requested power of l");
  const std::uint32_t lv = static_cast<std::uint32_t>(ipow(ell_, v));
  auto d = digits(x);
  for (auto& c : d) c /= lv;
  return from_digits(d);
}

FiniteLocalRing::Elem FiniteLocalRing::ell_power(std::uint32_t v) const {
  if (v >= m_) return 0;
  return static_cast<Elem>(ipow(ell_, v));
}

FqField::Elem FiniteLocalRing::reduce(Elem x) const {
  if (m_ == 1) return x;
  FqField::Elem r = 0, w = 1;
  for (auto d : digits(x)) {
    r += (d % ell_) * w;
    w *= ell_;
  }
  return r;
}

FiniteLocalRing::Elem FiniteLocalRing::from_int(long long n) const {
  long long r = n % static_cast<long long>(base_);
  if (r < 0) r += base_;
  return static_cast<Elem>(r);
}

std::string FiniteLocalRing::format(Elem x) const {
  if (f_ == 1) return std::to_string(x);
  const auto d = digits(x);
  std::string out;
  for (std::uint32_t i = f_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FiniteLocalRing::Elem FiniteLocalRing::parse_elem(std::string_view s_in) const {
  const std::string s = trim(s_in);
  if (s.empty()) throw std::invalid_argument("empty ring element");
  Elem total = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    const std::string term = s.substr(i, j - i);
    if (term.empty()) throw std::invalid_argument("bad ring element '" + s + "'");
    Elem value;
    const auto apos = term.find('a');
    if (apos == std::string::npos) {
      if (term.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad ring element '" + s + "'");
      value = from_int(static_cast<long long>(std::stoull(term) % base_));
    } else {
      if (f_ == 1) throw std::invalid_argument("ring " + name() + " has no generator 'a'");
      std::string coef = term.substr(0, apos);
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
      std::uint64_t e = 1;
      const std::string tail = term.substr(apos + 1);
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2 || tail.find_first_not_of("0123456789", 1) != std::string::npos)
          throw std::invalid_argument("bad ring element '" + s + "'");
        e = std::stoull(tail.substr(1));
      }
      if (!coef.empty() && coef.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad ring element '" + s + "'");
      const Elem c = coef.empty() ? from_int(1) : from_int(static_cast<long long>(std::stoull(coef) % base_));
      value = mul(c, pow(base_, e));  // the encoding of a is l^m
    }
    total = negative ? sub(total, value) : add(total, value);
    i = j;
  }
  return total;
}

RingMatrix identity_matrix(int d) {
  RingMatrix I(d);
  for (int i = 0; i < d; ++i) I(i, i) = 1;
  return I;
}

RingMatrix scalar_matrix(const FiniteLocalRing&, int d, FiniteLocalRing::Elem s) {
  RingMatrix S(d);
  for (int i = 0; i < d; ++i) S(i, i) = s;
  return S;
}

RingMatrix mat_mul(const FiniteLocalRing& R, const RingMatrix& A, const RingMatrix& B) {
  const int d = A.d;
  RingMatrix C(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const auto a = A(i, k);
      if (a == 0) continue;
      for (int j = 0; j < d; ++j) C(i, j) = R.add(C(i, j), R.mul(a, B(k, j)));
    }
  return C;
}

RingMatrix mat_scale(const FiniteLocalRing& R, const RingMatrix& A, FiniteLocalRing::Elem s) {
  RingMatrix C = A;
  for (auto& x : C.e) x = R.mul(x, s);
  return C;
}

FiniteLocalRing::Elem mat_trace(const FiniteLocalRing& R, const RingMatrix& A) {
  FiniteLocalRing::Elem t = 0;
  for (int i = 0; i < A.d; ++i) t = R.add(t, A(i, i));
  return t;
}

namespace {

FiniteLocalRing::Elem det_rec(const FiniteLocalRing& R, const std::vector<FiniteLocalRing::Elem>& a, int d) {
  if (d == 1) return a[0];
  if (d == 2) return R.sub(R.mul(a[0], a[3]), R.mul(a[1], a[2]));
  FiniteLocalRing::Elem total = 0;
  std::vector<FiniteLocalRing::Elem> minor(static_cast<std::size_t>((d - 1) * (d - 1)));
  for (int c = 0; c < d; ++c) {
    if (a[static_cast<std::size_t>(c)] == 0) continue;
    std::size_t k = 0;
    for (int i = 1; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (j != c) minor[k++] = a[static_cast<std::size_t>(i * d + j)];
    const auto term = R.mul(a[static_cast<std::size_t>(c)], det_rec(R, minor, d - 1));
    total = (c % 2 == 0) ? R.add(total, term) : R.sub(total, term);
  }
  return total;
}

}  // namespace

FiniteLocalRing::Elem mat_det(const FiniteLocalRing& R, const RingMatrix& A) {
  if (A.d > 8) throw std::invalid_argument("determinant implemented for d <= 8");
  return det_rec(R, A.e, A.d);
}

RingMatrix mat_inverse(const FiniteLocalRing& R, const RingMatrix& A) {
  const int d = A.d;
  RingMatrix M = A, I = identity_matrix(d);
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (R.is_unit(M(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix is not invertible over " + R.name());
    if (piv != col)
      for (int j = 0; j < d; ++j) {
        std::swap(M(piv, j), M(col, j));
        std::swap(I(piv, j), I(col, j));
      }
    const auto s = R.inv(M(col, col));
    for (int j = 0; j < d; ++j) {
      M(col, j) = R.mul(M(col, j), s);
      I(col, j) = R.mul(I(col, j), s);
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || M(r, col) == 0) continue;
      const auto t = M(r, col);
      for (int j = 0; j < d; ++j) {
        M(r, j) = R.sub(M(r, j), R.mul(t, M(col, j)));
        I(r, j) = R.sub(I(r, j), R.mul(t, I(col, j)));
      }
    }
  }
  return I;
}

RingMatrix mat_transpose(const RingMatrix& A) {
  RingMatrix T(A.d);
  for (int i = 0; i < A.d; ++i)
    for (int j = 0; j < A.d; ++j) T(j, i) = A(i, j);
  return T;
}

RingMatrix block_diagonal(const RingMatrix& A, const RingMatrix& B) {
  RingMatrix C(A.d + B.d);
  for (int i = 0; i < A.d; ++i)
    for (int j = 0; j < A.d; ++j) C(i, j) = A(i, j);
  for (int i = 0; i < B.d; ++i)
    for (int j = 0; j < B.d; ++j) C(A.d + i, A.d + j) = B(i, j);
  return C;
}

RingMatrix block(const RingMatrix& A, int offset, int d) {
  RingMatrix B(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) B(i, j) = A(offset + i, offset + j);
  return B;
}

bool is_scalar(const RingMatrix& A) {
  for (int i = 0; i < A.d; ++i)
    for (int j = 0; j < A.d; ++j)
      if ((i != j && A(i, j) != 0) || (i == j && A(i, i) != A(0, 0))) return false;
  return true;
}

std::string format_matrix(const FiniteLocalRing& R, const RingMatrix& A) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < A.d; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < A.d; ++j) os << (j ? "," : "") << R.format(A(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace prymcheck
