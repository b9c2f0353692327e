#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btk/axioms.hpp"
#include "fixtures.hpp"

#include <random>

using namespace btk;
using namespace btk::testing;

namespace {

std::mt19937_64 rng(4242);

StructureTriple random_triple(int k, bool with_comp) {
  auto table = [&](int len) {
    std::vector<int> idx(static_cast<std::size_t>(len));
    for (int& v : idx) v = std::uniform_int_distribution<int>(1, k)(rng);
    return idx;
  };
  StructureTriple a;
  a.k = k;
  a.meet = LogicalMatrix(k, table(k * k));
  a.join = LogicalMatrix(k, table(k * k));
  if (with_comp) a.comp = LogicalMatrix(k, table(k));
  return a;
}

}  // namespace

TEST_CASE("is_lattice on catalog and counterexamples") {
  for (const auto& a : catalog4()) CHECK(is_lattice(a));
  for (const auto& a : catalog5()) CHECK(is_lattice(a));
  CHECK(is_lattice(ba2()));
  CHECK(is_lattice(m3()));

  // non-commutative meet
  const auto bad = make_algebra(2, {1, 2, 1, 2}, {1, 1, 1, 2});
  CHECK_FALSE(is_lattice(bad));
  CHECK_FALSE(check(bad).meet_commutative);
}

TEST_CASE("is_distributive") {
  CHECK(is_distributive(catalog4()[1]));
  CHECK(is_distributive(ba2()));
  CHECK_FALSE(is_distributive(m3()));
  for (const auto& a : catalog5()) CHECK(is_distributive(a));
}

TEST_CASE("is_bounded") {
  CHECK(is_bounded(catalog4()[2]));
  for (const auto& a : catalog4()) CHECK(is_bounded(a));
  // first meet block not the identity
  const auto bad = make_algebra(3, {1, 2, 2, 2, 2, 3, 2, 3, 3}, {1, 1, 1, 1, 2, 2, 1, 2, 3});
  CHECK_FALSE(is_bounded(bad));
}

TEST_CASE("absorption implies idempotence") {
  for (const auto& a : catalog5()) {
    REQUIRE(is_lattice(a));
    for (int x = 1; x <= a.k; ++x) {
      CHECK(apply_binary(a.meet, x, x) == x);
      CHECK(apply_binary(a.join, x, x) == x);
    }
  }
}

TEST_CASE("classify_complement flags") {
  auto a = catalog4()[0];
  a.comp = LogicalMatrix(4, {4, 2, 3, 1});
  auto r = classify_complement(a);
  CHECK(r.dic);
  CHECK_FALSE(r.de_morgan);
  CHECK(r.free_complement);

  auto b = catalog4()[2];
  b.comp = LogicalMatrix(4, {4, 3, 2, 1});
  r = classify_complement(b);
  CHECK(r.pseudo);
  CHECK(r.stone);
  CHECK(r.boolean_algebra);
  CHECK(r.kleene);

  b.comp.reset();
  CHECK_THROWS_AS(classify_complement(b), std::invalid_argument);
}

TEST_CASE("pseudo_complement construction") {
  CHECK(pseudo_complement(catalog4()[0]) == LogicalMatrix(4, {4, 4, 4, 1}));
  CHECK(pseudo_complement(catalog4()[1]) == LogicalMatrix(4, {4, 4, 4, 1}));
  CHECK(pseudo_complement(catalog4()[2]) == LogicalMatrix(4, {4, 3, 2, 1}));
  CHECK(pseudo_complement(ba2()) == LogicalMatrix(2, {2, 1}));
  // the modular diamond has no pseudo complement: the join of the
  // annihilators of a middle element does not annihilate it
  CHECK_FALSE(pseudo_complement(m3()).has_value());
}

TEST_CASE("matrix and pointwise verdicts agree everywhere") {
  for (const auto& lattice : catalog4()) {
    for (int c1 = 1; c1 <= 4; ++c1)
      for (int c2 = 1; c2 <= 4; ++c2)
        for (int c3 = 1; c3 <= 4; ++c3)
          for (int c4 = 1; c4 <= 4; ++c4) {
            auto a = lattice;
            a.comp = LogicalMatrix(4, {c1, c2, c3, c4});
            CHECK(check_matrix(a) == check_pointwise(a));
          }
  }
  for (int trial = 0; trial < 500; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const auto a = random_triple(k, trial % 2 == 0);
    CHECK(check_matrix(a) == check_pointwise(a));
  }
}

TEST_CASE("class implications hold on classified distributive algebras") {
  for (const auto& lattice : catalog4()) {
    for (int c1 = 1; c1 <= 4; ++c1)
      for (int c2 = 1; c2 <= 4; ++c2)
        for (int c3 = 1; c3 <= 4; ++c3)
          for (int c4 = 1; c4 <= 4; ++c4) {
            auto a = lattice;
            a.comp = LogicalMatrix(4, {c1, c2, c3, c4});
            const auto r = classify_complement(a);
            if (r.kleene) CHECK(r.de_morgan);
            if (r.stone) CHECK(r.pseudo);
            if (r.boolean_algebra) {
              CHECK(r.stone);
              CHECK(r.pseudo);
            }
          }
  }
}

TEST_CASE("cross-checking flag") {
  CHECK(cross_checking());
  set_cross_checking(false);
  CHECK_FALSE(cross_checking());
  CHECK(is_lattice(ba2()));
  set_cross_checking(true);
}

TEST_CASE("one-element algebra satisfies everything") {
  const auto t = trivial1();
  const auto c = check(t);
  CHECK(c.lattice());
  CHECK(c.distributive);
  CHECK(c.bounded);
  CHECK(c.boolean_);
  CHECK(c.stone);
}
