#include <random>

#include "doctest.h"
#include "prymcheck/group.hpp"
#include "prymcheck/ring.hpp"

using namespace prymcheck;
using E = FiniteLocalRing::Elem;

namespace {
const char* kRings[] = {"F_7", "F_8", "F_25", "Z/9", "Z/8", "Z/27", "GR(9,2)", "GR(4,3)"};

RingMatrix mat(std::initializer_list<E> xs) {
  RingMatrix m(2);
  std::size_t i = 0;
  for (auto x : xs) m.e[i++] = x;
  return m;
}
}  // namespace

TEST_CASE("parsing ring names") {
  CHECK(FiniteLocalRing::parse("Z/9")->size() == 9);
  CHECK(FiniteLocalRing::parse("F_5^2")->size() == 25);
  CHECK(FiniteLocalRing::parse("GR(9,2)")->size() == 81);
  CHECK(FiniteLocalRing::parse("F_49")->is_field());
  CHECK_FALSE(FiniteLocalRing::parse("Z/27")->is_field());
  CHECK_THROWS(FiniteLocalRing::parse("Z/12"));
  CHECK_THROWS(FiniteLocalRing::parse("F_6"));
  CHECK_THROWS(FiniteLocalRing::parse("Q"));
}

TEST_CASE("Z/N agrees with integer arithmetic") {
  for (std::uint32_t N : {4u, 8u, 9u, 25u, 27u}) {
    auto R = FiniteLocalRing::parse("Z/" + std::to_string(N));
    for (E x = 0; x < N; ++x)
      for (E y = 0; y < N; ++y) {
        CHECK(R->mul(x, y) == (x * y) % N);
        CHECK(R->add(x, y) == (x + y) % N);
      }
  }
}

TEST_CASE("ring axioms, units and valuations") {
  std::mt19937_64 rng(1);
  for (const char* name : kRings) {
    auto R = FiniteLocalRing::parse(name);
    CAPTURE(name);
    std::uniform_int_distribution<E> d(0, R->size() - 1);
    std::uint64_t units = 0;
    for (E x = 0; x < R->size(); ++x) {
      if (!R->is_unit(x)) continue;
      ++units;
      CHECK(R->mul(x, R->inv(x)) == 1);
    }
    CHECK(units == R->unit_count());
    CHECK_THROWS_AS(R->inv(R->ell_power(1) % R->size()), std::domain_error);
    for (int i = 0; i < 300; ++i) {
      const E x = d(rng), y = d(rng), z = d(rng);
      CHECK(R->mul(x, R->mul(y, z)) == R->mul(R->mul(x, y), z));
      CHECK(R->mul(x, R->add(y, z)) == R->add(R->mul(x, y), R->mul(x, z)));
      CHECK(R->sub(R->add(x, y), y) == x);
      // Reduction is a ring map.
      const auto& k = *R->residue_field();
      CHECK(R->reduce(R->mul(x, y)) == k.mul(R->reduce(x), R->reduce(y)));
      CHECK(R->reduce(R->add(x, y)) == k.add(R->reduce(x), R->reduce(y)));
      CHECK(R->valuation(R->mul(x, y)) == std::min(R->m(), R->valuation(x) + R->valuation(y)));
      const auto v = R->valuation(x);
      if (v < R->m()) CHECK(R->mul(R->ell_power(v), R->divide_by_ell_power(x, v)) == x);
      CHECK(R->parse_elem(R->format(x)) == x);
    }
  }
}

TEST_CASE("matrices: determinant, inverse, blocks") {
  std::mt19937_64 rng(2);
  for (const char* name : kRings) {
    auto R = FiniteLocalRing::parse(name);
    std::uniform_int_distribution<E> d(0, R->size() - 1);
    for (int i = 0; i < 50; ++i) {
      RingMatrix A(3), B(3);
      for (auto& x : A.e) x = d(rng);
      for (auto& x : B.e) x = d(rng);
      CHECK(mat_det(*R, mat_mul(*R, A, B)) == R->mul(mat_det(*R, A), mat_det(*R, B)));
      CHECK(mat_det(*R, mat_transpose(A)) == mat_det(*R, A));
      CHECK(mat_trace(*R, mat_mul(*R, A, B)) == mat_trace(*R, mat_mul(*R, B, A)));
      if (R->is_unit(mat_det(*R, A))) {
        CHECK(mat_mul(*R, A, mat_inverse(*R, A)) == identity_matrix(3));
      } else {
        CHECK_THROWS_AS(mat_inverse(*R, A), std::domain_error);
      }
      const auto D = block_diagonal(A, B);
      CHECK(block(D, 0, 3) == A);
      CHECK(block(D, 3, 3) == B);
    }
  }
  auto R = FiniteLocalRing::parse("Z/9");
  CHECK(format_matrix(*R, mat({1, 2, 3, 4})) == "[[1,2],[3,4]]");
  CHECK(is_scalar(scalar_matrix(*R, 2, 5)));
}

TEST_CASE("closure, orders and commutators") {
  auto F5 = FiniteLocalRing::parse("F_5");
  const auto G = MatrixGroup::closure(F5, {mat({0, 4, 1, 0}), mat({1, 1, 0, 1})});
  CHECK(G.size() == 120);
  CHECK(G.element(0) == identity_matrix(2));
  CHECK_FALSE(G.is_abelian());
  // SL_2(F_5) is perfect, checked over all 120^2 commutators.
  CHECK(commutator_subgroup_exhaustive(G).size() == 120);
  CHECK(commutator_subgroup(G).size() == 120);
  CHECK(is_perfect(G));
  std::size_t total = 0;
  for (auto [ord, cnt] : G.order_statistics()) {
    total += cnt;
    CHECK(120 % ord == 0);
  }
  CHECK(total == 120);
  for (std::size_t i = 0; i < G.size(); i += 7) {
    CHECK(G.mul(i, G.inverse(i)) == 0);
    RingMatrix W = identity_matrix(2);
    for (int g : G.word(i)) W = mat_mul(*F5, W, G.generators()[static_cast<std::size_t>(g)]);
    CHECK(W == G.element(i));
  }
  // GL_2(F_5): derived subgroup SL_2, and the det-1 subgroup is the same.
  const auto GL = MatrixGroup::closure(F5, {mat({0, 4, 1, 0}), mat({1, 1, 0, 1}), mat({2, 0, 0, 1})});
  CHECK(GL.size() == 480);
  CHECK(commutator_subgroup(GL).size() == 120);
  CHECK(subgroup_where(GL, [&](const RingMatrix& A) { return mat_det(*F5, A) == 1; }).size() == 120);
  // Modulo scalars: PGL_2(F_5) has order 120.
  CHECK(MatrixGroup::closure(F5, GL.generators(), kClosureCap, projective_normalizer(F5)).size() == 120);
  CHECK_THROWS_AS(MatrixGroup::closure(F5, {mat({1, 0, 0, 0})}), std::invalid_argument);
  CHECK_THROWS_AS(MatrixGroup::closure(F5, GL.generators(), 100), ClosureOverflow);
}

TEST_CASE("representations are checked on every edge") {
  auto F7 = FiniteLocalRing::parse("F_7");
  auto G = std::make_shared<const MatrixGroup>(MatrixGroup::closure(F7, {mat({0, 6, 1, 6}), mat({0, 1, 1, 0})}));
  CHECK(G->size() == 6);
  // Sign character as a 1x1 representation.
  RingMatrix one(1), minus(1);
  one.e[0] = 1;
  minus.e[0] = 6;
  const auto sign = GroupRep::make(G, F7, {one, minus});
  for (std::size_t i = 0; i < G->size(); ++i)
    CHECK(sign.image(i).e[0] == mat_det(*F7, G->element(i)));
  // The order-3 generator cannot map to -1.
  CHECK_THROWS_AS(GroupRep::make(G, F7, {minus, minus}), std::invalid_argument);
}
