#include <functional>
#include <random>

#include "dickson_cases.hpp"
#include "doctest.h"
#include "prymcheck/dickson.hpp"

using namespace prymcheck;
using oracle::M2;

using cases::Builder;
using cases::curated;

TEST_CASE("curated subgroups: classifier, oracle and construction agree") {
  const auto list = curated();
  CHECK(list.size() >= 20);
  for (const auto& c : list) {
    CAPTURE(c.name);
    const Builder b(c.p, c.k);
    const auto gens = c.gens(b);
    const auto got = dickson_classify(b.R, b.to_ring(gens));
    const auto want = oracle::classify(b.F, gens);
    CHECK(want.tag == c.tag);
    CHECK(want.q0 == c.q0);
    CHECK(want.exceptional == c.exceptional);
    CHECK(tag_name(got.tag) == want.tag);
    CHECK(got.q0 == want.q0);
    CHECK((got.exceptional ? exceptional_name(*got.exceptional) : std::string()) == want.exceptional);
    if (want.tag != "Reducible") CHECK(got.projective_order == want.projective_order);
  }
}

TEST_CASE("classification is conjugation invariant") {
  std::mt19937_64 rng(99);
  for (const auto& c : curated()) {
    if (c.name != "SL2(F7)" && c.name != "S4 F5" && c.name != "nonsplit normalizer F7" && c.name != "Borel F7" &&
        c.name != "2.A4 F7")
      continue;
    const Builder b(c.p, c.k);
    const auto gens = c.gens(b);
    const auto base = dickson_classify(b.R, b.to_ring(gens)).tag;
    std::uniform_int_distribution<std::uint32_t> d(0, b.F->q() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      M2 g{d(rng), d(rng), d(rng), d(rng)};
      const auto det = b.F->sub(b.F->mul(g[0], g[3]), b.F->mul(g[1], g[2]));
      if (det == 0) {
        --trial;
        continue;
      }
      const auto di = b.F->inv(det);
      const M2 gi{b.F->mul(g[3], di), b.F->neg(b.F->mul(g[1], di)), b.F->neg(b.F->mul(g[2], di)), b.F->mul(g[0], di)};
      std::vector<M2> conj;
      for (const auto& x : gens) conj.push_back(b.mul(b.mul(g, x), gi));
      CAPTURE(c.name);
      CHECK(dickson_classify(b.R, b.to_ring(conj)).tag == base);
    }
  }
}

TEST_CASE("GL2(F_q) contains SL2(F_q)") {
  for (auto [p, k] : {std::pair{5u, 1u}, {7u, 1u}, {3u, 2u}, {11u, 1u}, {13u, 1u}}) {
    const Builder b(p, k);
    const auto r = dickson_classify(b.R, b.to_ring(b.gl2()));
    CHECK(r.tag == DicksonTag::ContainsSL2);
    CHECK(r.q0 == b.F->q());
    CHECK(r.derived_perfect);
    CHECK(r.derived_in_subfield);
  }
}

TEST_CASE("exceptional fingerprints") {
  CHECK(match_exceptional({{1, 1}, {2, 3}, {3, 8}}) == ExceptionalType::A4);
  CHECK(match_exceptional({{1, 1}, {2, 9}, {3, 8}, {4, 6}}) == ExceptionalType::S4);
  CHECK(match_exceptional({{1, 1}, {2, 15}, {3, 20}, {5, 24}}) == ExceptionalType::A5);
  CHECK_FALSE(match_exceptional({{1, 1}, {2, 1}}).has_value());
}

TEST_CASE("Taylor-Wiles check") {
  for (auto [p, k] : {std::pair{5u, 1u}, {7u, 1u}, {3u, 2u}}) {
    const Builder b(p, k);
    const auto r = taylor_wiles_check(b.R, b.to_ring(b.gl2()));
    CHECK(r.ok());
    CHECK(r.perfect);
    CHECK(r.kernel_irreducible);
    const std::uint64_t q = b.F->q();
    CHECK(r.derived_order == q * (q * q - 1));
    CHECK(r.kernel_order == q * (q * q - 1));  // ker det = SL_2
  }
  const Builder b(7);
  CHECK_THROWS_AS(taylor_wiles_check(b.R, b.to_ring(b.borel())), PreconditionError);
  CHECK_THROWS_AS(taylor_wiles_check(b.R, b.to_ring(b.split_normalizer())), PreconditionError);
}

TEST_CASE("input validation") {
  const Builder b(7);
  CHECK_THROWS(dickson_classify(FiniteLocalRing::parse("Z/9"), {RingMatrix(2)}));
  CHECK_THROWS(dickson_classify(b.R, {identity_matrix(3)}));
}
