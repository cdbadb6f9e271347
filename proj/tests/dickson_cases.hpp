// Curated subgroups of GL_2(F_q), q in {5, 7, 9, 25, 49}, with their
// expected Dickson type by construction.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dickson_oracle.hpp"
#include "prymcheck/dickson.hpp"

namespace cases {

using namespace prymcheck;
using oracle::M2;

struct Builder {
  RingPtr R;
  FieldPtr F;
  explicit Builder(std::uint32_t p, std::uint32_t k = 1) : R(FiniteLocalRing::make(p, 1, k)), F(R->residue_field()) {}
  std::uint32_t g() const { return F->generator(); }
  std::uint32_t n(long long x) const { return F->from_int(x); }
  M2 mul(const M2& a, const M2& b) const { return oracle::mul(*F, a, b); }
  M2 add(const M2& a, const M2& b) const {
    return {F->add(a[0], b[0]), F->add(a[1], b[1]), F->add(a[2], b[2]), F->add(a[3], b[3])};
  }
  M2 scale(std::uint32_t s, const M2& a) const { return {F->mul(s, a[0]), F->mul(s, a[1]), F->mul(s, a[2]), F->mul(s, a[3])}; }
  M2 I() const { return {1, 0, 0, 1}; }
  M2 upper(std::uint32_t x) const { return {1, x, 0, 1}; }
  M2 diag(std::uint32_t a, std::uint32_t d) const { return {a, 0, 0, d}; }
  M2 w() const { return {0, n(-1), 1, 0}; }
  std::uint32_t sqrt(std::uint32_t x) const {
    for (std::uint32_t y = 0; y < F->q(); ++y)
      if (F->mul(y, y) == x) return y;
    throw std::logic_error("no square root");
  }
  // Quaternion units i, j with i^2 = j^2 = -1, ij = -ji.
  std::pair<M2, M2> quaternion_ij() const {
    for (std::uint32_t a = 0; a < F->q(); ++a)
      for (std::uint32_t b = 0; b < F->q(); ++b)
        if (F->add(F->mul(a, a), F->mul(b, b)) == n(-1)) return {w(), {a, b, b, F->neg(a)}};
    throw std::logic_error("no quaternion basis");
  }
  std::vector<M2> binary_tetrahedral() const {
    auto [i, j] = quaternion_ij();
    const M2 k = mul(i, j);
    const M2 s = add(add(I(), i), add(j, k));
    return {i, j, scale(F->neg(F->inv(2)), s)};
  }
  std::vector<M2> octahedral() const {
    auto gens = binary_tetrahedral();
    gens.push_back(add(I(), gens[0]));
    return gens;
  }
  std::vector<M2> icosahedral() const {
    auto [i, j] = quaternion_ij();
    const auto r5 = sqrt(n(5));
    const auto phi = F->mul(F->add(1, r5), F->inv(2));
    const M2 u = scale(F->inv(2), add(add(scale(phi, I()), scale(F->inv(phi), i)), j));
    return {i, j, u};
  }
  std::vector<M2> split_normalizer() const { return {diag(g(), 1), {0, 1, 1, 0}}; }
  std::vector<M2> borel() const { return {upper(1), diag(g(), 1), diag(1, g())}; }
  std::vector<M2> sl2() const {
    std::vector<M2> out{w(), upper(1)};
    for (std::uint32_t e = 1; e < F->k(); ++e) out.push_back(upper(F->pow(g(), e)));
    return out;
  }
  std::vector<M2> sl2_prime() const { return {w(), upper(1)}; }
  std::vector<M2> gl2() const {
    auto out = sl2();
    out.push_back(diag(g(), 1));
    return out;
  }
  std::size_t order(const M2& a) const {
    std::size_t k = 1;
    for (M2 x = a; x != I(); x = mul(x, a)) ++k;
    return k;
  }
  M2 nonsplit_cartan() const {
    const std::size_t want = static_cast<std::size_t>(F->q()) * F->q() - 1;
    for (std::uint32_t c0 = 1; c0 < F->q(); ++c0)
      for (std::uint32_t c1 = 0; c1 < F->q(); ++c1) {
        const M2 a{0, F->neg(c0), 1, F->neg(c1)};
        if (order(a) == want) return a;
      }
    throw std::logic_error("no nonsplit Cartan generator");
  }
  std::vector<M2> nonsplit_normalizer() const {
    const M2 a = nonsplit_cartan();
    M2 aq = I();
    for (std::uint32_t i = 0; i < F->q(); ++i) aq = mul(aq, a);
    for (std::uint32_t e = 0; e < F->q() * F->q() * F->q() * F->q(); ++e) {
      std::uint32_t r = e;
      M2 s;
      for (auto& x : s) {
        x = r % F->q();
        r /= F->q();
      }
      const auto det = F->sub(F->mul(s[0], s[3]), F->mul(s[1], s[2]));
      if (det != 0 && mul(s, a) == mul(aq, s)) return {a, s};
    }
    throw std::logic_error("no normalizer element");
  }
  RingMatrix to_ring(const M2& a) const {
    RingMatrix m(2);
    for (int i = 0; i < 4; ++i) m.e[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
    return m;
  }
  std::vector<RingMatrix> to_ring(const std::vector<M2>& gs) const {
    std::vector<RingMatrix> out;
    for (const auto& a : gs) out.push_back(to_ring(a));
    return out;
  }
};

struct Case {
  std::string name;
  std::uint32_t p, k;
  std::function<std::vector<M2>(const Builder&)> gens;
  std::string tag;
  std::uint32_t q0 = 0;
  std::string exceptional;
};

inline std::vector<Case> curated() {
  using B = const Builder&;
  return {
      {"SL2(F5)", 5, 1, [](B b) { return b.sl2(); }, "ContainsSL2", 5},
      {"GL2(F5)", 5, 1, [](B b) { return b.gl2(); }, "ContainsSL2", 5},
      {"Borel F5", 5, 1, [](B b) { return b.borel(); }, "Reducible"},
      {"split normalizer F5", 5, 1, [](B b) { return b.split_normalizer(); }, "Dihedral"},
      {"Q8 F5", 5, 1, [](B b) { auto [i, j] = b.quaternion_ij(); return std::vector<M2>{i, j}; }, "Dihedral"},
      {"2.A4 F5", 5, 1, [](B b) { return b.binary_tetrahedral(); }, "Exceptional", 0, "A4"},
      {"S4 F5", 5, 1, [](B b) { return b.octahedral(); }, "Exceptional", 0, "S4"},
      {"SL2(F7)", 7, 1, [](B b) { return b.sl2(); }, "ContainsSL2", 7},
      {"GL2(F7)", 7, 1, [](B b) { return b.gl2(); }, "ContainsSL2", 7},
      {"Borel F7", 7, 1, [](B b) { return b.borel(); }, "Reducible"},
      {"unipotent F7", 7, 1, [](B b) { return std::vector<M2>{b.upper(1)}; }, "Reducible"},
      {"split normalizer F7", 7, 1, [](B b) { return b.split_normalizer(); }, "Dihedral"},
      {"nonsplit Cartan F7", 7, 1, [](B b) { return std::vector<M2>{b.nonsplit_cartan()}; }, "Reducible"},
      {"nonsplit normalizer F7", 7, 1, [](B b) { return b.nonsplit_normalizer(); }, "Dihedral"},
      {"2.A4 F7", 7, 1, [](B b) { return b.binary_tetrahedral(); }, "Exceptional", 0, "A4"},
      {"2.S4 F7", 7, 1, [](B b) { return b.octahedral(); }, "Exceptional", 0, "S4"},
      {"SL2(F9)", 3, 2, [](B b) { return b.sl2(); }, "ContainsSL2", 9},
      {"SL2(F3) in F9", 3, 2, [](B b) { return b.sl2_prime(); }, "Exceptional", 0, "A4"},
      {"Q8 F9", 3, 2, [](B b) { auto [i, j] = b.quaternion_ij(); return std::vector<M2>{i, j}; }, "Dihedral"},
      {"SL2(F5) in F25", 5, 2, [](B b) { return b.sl2_prime(); }, "ContainsSL2", 5},
      {"SL2(F25)", 5, 2, [](B b) { return b.sl2(); }, "ContainsSL2", 25},
      {"Borel F25", 5, 2, [](B b) { return b.borel(); }, "Reducible"},
      {"S4 F25", 5, 2, [](B b) { return b.octahedral(); }, "Exceptional", 0, "S4"},
      {"SL2(F7) in F49", 7, 2, [](B b) { return b.sl2_prime(); }, "ContainsSL2", 7},
      {"2.A5 F49", 7, 2, [](B b) { return b.icosahedral(); }, "Exceptional", 0, "A5"},
      {"split normalizer F49", 7, 2, [](B b) { return b.split_normalizer(); }, "Dihedral"},
      {"2.A4 F49", 7, 2, [](B b) { return b.binary_tetrahedral(); }, "Exceptional", 0, "A4"},
  };
}

}  // namespace cases
