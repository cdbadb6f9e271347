#include "prymcheck/ffield.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prymcheck {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

// Remainder of a modulo monic m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint64_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        std::uint64_t sub = lead * m[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool has_factor_of_degree(const Poly& f, std::uint32_t d, std::uint32_t p) {
  // brute force over monic g of degree d
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly g(d + 1);
    std::uint64_t t = c;
    for (std::uint32_t i = 0; i < d; ++i) {
      g[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    g[d] = 1;
    Poly r = poly_mod(f, g, p);
    bool zero = true;
    for (auto v : r) zero = zero && v == 0;
    if (zero) return true;
  }
  return false;
}

}  // namespace

std::shared_ptr<const FqField> FqField::make(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_order) throw std::invalid_argument("field order exceeds configured cap");
  }
  auto f = std::shared_ptr<FqField>(new FqField());
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<std::uint32_t>(q);
  f->build();
  return f;
}

std::shared_ptr<const FqField> FqField::parse(std::string_view spec) {
  std::string s(spec);
  std::uint32_t p = 0, k = 1;
  auto caret = s.find('^');
  try {
    std::size_t used = 0;
    p = static_cast<std::uint32_t>(std::stoul(s.substr(0, caret), &used));
    if (used != (caret == std::string::npos ? s.size() : caret)) throw std::invalid_argument("");
    if (caret != std::string::npos) {
      k = static_cast<std::uint32_t>(std::stoul(s.substr(caret + 1), &used));
      if (used != s.size() - caret - 1) throw std::invalid_argument("");
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad field spec '" + s + "', expected p or p^k");
  }
  return make(p, k);
}

std::string FqField::name() const {
  std::ostringstream os;
  os << "F_" << q_;
  return os.str();
}

void FqField::build() {
  pw_.assign(k_ + 1, 1);
  for (std::uint32_t i = 1; i <= k_; ++i) pw_[i] = pw_[i - 1] * p_;

  // smallest monic irreducible of degree k, ordering by the encoded lower coefficients
  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint64_t c = 0; c < q_; ++c) {
      Poly f(k_ + 1);
      std::uint64_t t = c;
      for (std::uint32_t i = 0; i < k_; ++i) {
        f[i] = static_cast<std::uint32_t>(t % p_);
        t /= p_;
      }
      f[k_] = 1;
      if (f[0] == 0) continue;
      bool irreducible = true;
      for (std::uint32_t d = 1; 2 * d <= k_ && irreducible; ++d)
        irreducible = !has_factor_of_degree(f, d, p_);
      if (irreducible) {
        modulus_ = f;
        break;
      }
    }
    if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");
  }

  // smallest primitive element
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  gen_ = 0;
  for (Elem x = 1; x < q_; ++x) {
    if (q_ == 2) {
      gen_ = 1;
      break;
    }
    bool primitive = true;
    for (auto r : factors) {
      if (pow_poly(x, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_ = x;
      break;
    }
  }
  if (gen_ == 0) throw std::logic_error("no primitive element found");

  exp_.assign(order, 0);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_poly(cur, gen_);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch");

  trace_.assign(q_, 0);
  for (Elem x = 1; x < q_; ++x) {
    Elem s = 0;
    std::uint64_t e = log_[x];
    for (std::uint32_t i = 0; i < k_; ++i) {
      s = add(s, exp_[e % order]);
      e = (e * p_) % order;
    }
    if (s >= p_) throw std::logic_error("trace left the prime field");
    trace_[x] = s;
  }
}

FqField::Elem FqField::add(Elem x, Elem y) const {
  if (k_ == 1) {
    std::uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Elem r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = (x % p_ + y % p_) % p_;
    r += d * pw_[i];
    x /= p_;
    y /= p_;
  }
  return r;
}

FqField::Elem FqField::sub(Elem x, Elem y) const {
  if (k_ == 1) return x >= y ? x - y : x + p_ - y;
  Elem r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = (x % p_ + p_ - y % p_) % p_;
    r += d * pw_[i];
    x /= p_;
    y /= p_;
  }
  return r;
}

FqField::Elem FqField::inv(Elem x) const {
  if (x == 0) throw std::domain_error("inverse of zero in " + name());
  std::uint32_t l = log_[x];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

FqField::Elem FqField::pow(Elem x, long long e) const {
  if (x == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long long n = q_ - 1;
  long long r = static_cast<long long>((static_cast<__int128>(log_[x]) * (e % n)) % n);
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

FqField::Elem FqField::mul_poly(Elem x, Elem y) const {
  if (k_ == 1) return static_cast<Elem>(std::uint64_t(x) * y % p_);
  Poly a(k_), b(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    a[i] = x % p_;
    b[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  Poly c(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p_);
  c = poly_mod(c, modulus_, p_);
  Elem r = 0;
  for (std::uint32_t i = 0; i < c.size(); ++i) r += c[i] * pw_[i];
  return r;
}

FqField::Elem FqField::pow_poly(Elem x, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul_poly(r, x);
    x = mul_poly(x, x);
    e >>= 1;
  }
  return r;
}

FqField::Elem FqField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

bool FqField::is_nth_power(Elem x, std::uint32_t n) const {
  if (x == 0) return true;
  std::uint32_t g = std::gcd(n, q_ - 1);
  return log_[x] % g == 0;
}

std::string FqField::format(Elem x) const {
  if (k_ == 1) return std::to_string(x);
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(k_) - 1; i >= 0; --i) {
    std::uint32_t c = (x / pw_[static_cast<std::size_t>(i)]) % p_;
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << 'a';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace prymcheck
