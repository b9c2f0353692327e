#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btk/axioms.hpp"
#include "btk/enumeration.hpp"
#include "fixtures.hpp"
#include "order_oracle.hpp"

using namespace btk;
using namespace btk::testing;

TEST_CASE("k=4 bounded distributive catalog") {
  const auto got = enumerate_lattices(4, true);
  REQUIRE(got.size() == 3);
  CHECK(got == catalog4());
}

TEST_CASE("k=2 has a single lattice") {
  const auto got = enumerate_lattices(2, true);
  REQUIRE(got.size() == 1);
  CHECK(got[0].meet == LogicalMatrix(2, {1, 2, 2, 2}));
  CHECK(got[0].join == LogicalMatrix(2, {1, 1, 1, 2}));
}

TEST_CASE("k=5 bounded distributive catalog") {
  const auto got = enumerate_lattices(5, true);
  REQUIRE(got.size() == 12);
  CHECK(got == catalog5());
}

TEST_CASE("two independent generation strategies agree") {
  for (int k = 2; k <= 6; ++k) {
    CHECK(enumerate_lattices(k, true) == lattices_from_orders(k, true));
    CHECK(enumerate_lattices(k, false) == lattices_from_orders(k, false));
  }
}

TEST_CASE("every output is a bounded lattice, sorted, duplicate free") {
  for (int k = 2; k <= 5; ++k) {
    const auto got = enumerate_lattices(k, false);
    for (const auto& a : got) {
      CHECK(is_lattice(a));
      CHECK(is_bounded(a));
    }
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    CHECK(got == enumerate_lattices(k, false));  // deterministic
  }
}

TEST_CASE("lattice count caps") {
  CHECK_THROWS_AS(enumerate_lattices(1, true), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_lattices(7, true), std::invalid_argument);
  CHECK_NOTHROW(enumerate_lattices(7, true, 8));
}

TEST_CASE("k=4 complement catalogs") {
  const auto cat = catalog4();

  const auto dics = enumerate_complements(cat[0], ComplementClass::dic);
  CHECK(dics == std::vector<LogicalMatrix>{LogicalMatrix(4, {4, 2, 3, 1}),
                                           LogicalMatrix(4, {4, 3, 2, 1})});
  CHECK(enumerate_complements(cat[1], ComplementClass::dic) == dics);
  CHECK(enumerate_complements(cat[2], ComplementClass::dic) == dics);

  const auto dm1 = enumerate_complements(cat[0], ComplementClass::de_morgan);
  const auto dm2 = enumerate_complements(cat[1], ComplementClass::de_morgan);
  const auto dm3 = enumerate_complements(cat[2], ComplementClass::de_morgan);
  CHECK(dm1.size() == 35);
  CHECK(dm2.size() == 35);
  CHECK(dm3.size() == 16);

  // on the two chains every De Morgan complement is Kleene
  CHECK(enumerate_complements(cat[0], ComplementClass::kleene) == dm1);
  CHECK(enumerate_complements(cat[1], ComplementClass::kleene) == dm2);
  CHECK(enumerate_complements(cat[2], ComplementClass::kleene).size() == 9);

  for (std::size_t i = 0; i < 3; ++i) {
    const auto pseudo = enumerate_complements(cat[i], ComplementClass::pseudo);
    REQUIRE(pseudo.size() == 1);
    CHECK(pseudo[0] == (i < 2 ? LogicalMatrix(4, {4, 4, 4, 1}) : LogicalMatrix(4, {4, 3, 2, 1})));
    CHECK(enumerate_complements(cat[i], ComplementClass::stone) == pseudo);
  }

  CHECK(enumerate_complements(cat[0], ComplementClass::boolean_).empty());
  CHECK(enumerate_complements(cat[2], ComplementClass::boolean_) ==
        std::vector<LogicalMatrix>{LogicalMatrix(4, {4, 3, 2, 1})});
}

TEST_CASE("the free class is every unary map") {
  const auto ba = enumerate_lattices(2, true)[0];
  CHECK(enumerate_complements(ba, ComplementClass::free).size() == 4);
  CHECK(enumerate_complements(catalog4()[0], ComplementClass::free).size() == 256);

  const auto big = catalog5()[0];
  CHECK_THROWS_AS(enumerate_complements(big, ComplementClass::free), std::invalid_argument);
  std::size_t streamed = 0;
  for_each_complement(big, ComplementClass::free, [&](const LogicalMatrix&) { ++streamed; });
  CHECK(streamed == 3125);
}

TEST_CASE("complement enumeration rejects non-lattices") {
  const auto garbage = make_algebra(2, {2, 1, 1, 2}, {1, 1, 1, 2});
  CHECK_THROWS_AS(enumerate_complements(garbage, ComplementClass::dic), std::invalid_argument);
}

TEST_CASE("k=5 DIC list") {
  const auto dics = enumerate_complements(catalog5()[0], ComplementClass::dic);
  std::vector<LogicalMatrix> expected;
  for (const auto& c : dic5()) expected.emplace_back(5, c);
  std::sort(expected.begin(), expected.end());
  CHECK(dics == expected);
}

TEST_CASE("k=5 De Morgan algebras over DICs") {
  const auto got = enumerate_btas(5, {ComplementClass::de_morgan, ComplementClass::dic});
  REQUIRE(got.size() == 6);
  const auto lattices = catalog5();
  const auto dic = dic5();
  // (lattice, complement) pairs, catalog numbering
  const std::vector<std::pair<int, int>> expected = {{2, 3}, {3, 2}, {4, 4},
                                                     {6, 4}, {8, 2}, {9, 3}};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& [li, ci] = expected[i];
    CHECK(got[i].meet == lattices[static_cast<std::size_t>(li - 1)].meet);
    CHECK(got[i].join == lattices[static_cast<std::size_t>(li - 1)].join);
    CHECK(got[i].comp ==
          LogicalMatrix(5, dic[static_cast<std::size_t>(ci - 1)]));
  }
}

TEST_CASE("k=2 boolean algebra is unique") {
  const auto got = enumerate_btas(2, {ComplementClass::boolean_});
  REQUIRE(got.size() == 1);
  CHECK(got[0] == ba2());
}
