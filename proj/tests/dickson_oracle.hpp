// Brute-force subgroup analysis of H <= GL_2(F_q), written against FqField
// only: own closure, reducibility by testing every line over F_{q^2}, and
// the projective image read off element by element.
#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "prymcheck/ffield.hpp"

namespace oracle {

using prymcheck::FieldPtr;
using prymcheck::FqField;
using M2 = std::array<std::uint32_t, 4>;

struct M2Hash {
  std::size_t operator()(const M2& m) const { return ((std::size_t(m[0]) * 1315423911u + m[1]) * 2654435761u + m[2]) * 97u + m[3]; }
};

inline M2 mul(const FqField& F, const M2& a, const M2& b) {
  return {F.add(F.mul(a[0], b[0]), F.mul(a[1], b[2])), F.add(F.mul(a[0], b[1]), F.mul(a[1], b[3])),
          F.add(F.mul(a[2], b[0]), F.mul(a[3], b[2])), F.add(F.mul(a[2], b[1]), F.mul(a[3], b[3]))};
}

inline bool scalar(const M2& a) { return a[1] == 0 && a[2] == 0 && a[0] == a[3]; }

inline std::vector<M2> closure(const FqField& F, const std::vector<M2>& gens) {
  std::vector<M2> out{{1, 0, 0, 1}};
  std::unordered_set<M2, M2Hash> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      const M2 x = mul(F, out[i], g);
      if (seen.insert(x).second) out.push_back(x);
    }
  return out;
}

// A root of F_q's defining polynomial inside F_{q^2}, giving the embedding.
struct Embedding {
  FieldPtr small, big;
  std::uint32_t h = 0;
  explicit Embedding(const FieldPtr& F) : small(F), big(FqField::make(F->p(), 2 * F->k())) {
    const auto& poly = F->modulus();
    for (std::uint32_t x = 0; x < big->q(); ++x) {
      std::uint32_t v = 0, xp = 1;
      for (auto c : poly) {
        v = big->add(v, big->mul(big->from_int(c), xp));
        xp = big->mul(xp, x);
      }
      if (v == 0 && (F->k() == 1 || x >= F->p())) {
        h = x;
        return;
      }
    }
  }
  std::uint32_t operator()(std::uint32_t e) const {
    std::uint32_t v = 0, hp = 1;
    for (std::uint32_t i = 0; i < small->k(); ++i) {
      v = big->add(v, big->mul(big->from_int(e % small->p()), hp));
      e /= small->p();
      hp = big->mul(hp, h);
    }
    return v;
  }
};

inline bool reducible_over_quadratic(const FieldPtr& F, const std::vector<M2>& gens) {
  const Embedding emb(F);
  const auto& K = *emb.big;
  std::vector<M2> G;
  for (const auto& g : gens) G.push_back({emb(g[0]), emb(g[1]), emb(g[2]), emb(g[3])});
  // Lines spanned by (1, t) and (0, 1).
  auto fixed = [&](std::uint32_t x, std::uint32_t y) {
    for (const auto& g : G) {
      const auto u = K.add(K.mul(g[0], x), K.mul(g[1], y));
      const auto v = K.add(K.mul(g[2], x), K.mul(g[3], y));
      if (K.sub(K.mul(u, y), K.mul(v, x)) != 0) return false;
    }
    return true;
  };
  if (fixed(0, 1)) return true;
  for (std::uint32_t t = 0; t < K.q(); ++t)
    if (fixed(1, t)) return true;
  return false;
}

struct Verdict {
  std::string tag;  // same spelling as prymcheck::tag_name
  std::uint32_t q0 = 0;
  std::string exceptional;
  std::size_t projective_order = 0;
};

inline Verdict classify(const FieldPtr& F, const std::vector<M2>& gens) {
  const auto H = closure(*F, gens);
  std::size_t scalars = 0;
  for (const auto& a : H) scalars += scalar(a);
  Verdict v;
  v.projective_order = H.size() / scalars;
  if (reducible_over_quadratic(F, gens)) {
    v.tag = "Reducible";
    return v;
  }
  const std::size_t n = v.projective_order;
  const std::uint32_t p = F->p();
  // PSL_2(F_q0) is nonsolvable only for q0 >= 4; PSL_2(F_3) = A4 falls through.
  if (n % p == 0) {
    std::uint64_t q0 = 1;
    for (std::uint32_t j = 1; j <= F->k(); ++j) {
      q0 *= p;
      const std::uint64_t pgl = q0 * (q0 * q0 - 1);
      if (q0 >= 4 && (n == pgl || n == pgl / 2)) {
        v.tag = "ContainsSL2";
        v.q0 = static_cast<std::uint32_t>(q0);
      }
    }
    if (!v.tag.empty()) return v;
  }
  std::size_t max_order = 0;
  for (const auto& a : H) {
    std::size_t k = 1;
    for (M2 x = a; !scalar(x); x = mul(*F, x, a)) ++k;
    max_order = std::max(max_order, k);
  }
  if (n >= 4 && max_order == n / 2) {
    v.tag = "Dihedral";
  } else if (n == 12 || n == 24 || n == 60) {
    v.tag = "Exceptional";
    v.exceptional = n == 12 ? "A4" : n == 24 ? "S4" : "A5";
  } else {
    v.tag = "ProjectivelySmall";
  }
  return v;
}

}  // namespace oracle
