#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "posetpack/errors.hpp"
#include "posetpack/poset.hpp"

using posetpack::Poset;

TEST_CASE("build computes the transitive closure") {
  Poset v = Poset::build(3, {{0, 1}, {0, 2}});
  CHECK(v.less(0, 1));
  CHECK(v.less(0, 2));
  CHECK_FALSE(v.less(1, 2));
  CHECK_FALSE(v.less(1, 0));

  Poset j = Poset::build(4, {{0, 1}, {1, 2}, {0, 3}});
  CHECK(j.less(0, 2));  // transitively implied
  CHECK_FALSE(j.less(3, 2));
  CHECK(j == Poset::j());
}

TEST_CASE("covers are the transitive reduction") {
  // feeding implied pairs leaves the covers unchanged
  Poset chain = Poset::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chain.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(chain == Poset::chain(2));
}

TEST_CASE("rebuilding from the reduction reproduces the order") {
  Poset j = Poset::j();
  Poset again = Poset::build(j.size(), j.covers());
  CHECK(again == j);
  CHECK(again.covers() == j.covers());
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(Poset::build(2, {{0, 2}}), posetpack::RangeError);
  CHECK_THROWS_AS(Poset::build(2, {{-1, 0}}), posetpack::RangeError);
  CHECK_THROWS_AS(Poset::build(3, {{0, 1}, {1, 2}, {2, 0}}),
                  posetpack::CycleError);
  CHECK_THROWS_AS(Poset::build(1, {{0, 0}}), posetpack::CycleError);
  CHECK_THROWS_AS(Poset::build(0, {}), posetpack::RangeError);
  CHECK_THROWS_AS(Poset::build(17, {}), posetpack::RangeError);
  CHECK_THROWS_AS(Poset::antichain(0), posetpack::RangeError);
  CHECK_THROWS_AS(Poset::boolean(5), posetpack::RangeError);
}

TEST_CASE("standard posets") {
  CHECK(Poset::chain(2).size() == 3);
  CHECK(Poset::antichain(1).size() == 1);
  CHECK(Poset::antichain(1).covers().empty());
  CHECK(Poset::v().size() == 3);
  CHECK(Poset::lambda().less(1, 0));
  CHECK(Poset::lambda().less(2, 0));

  Poset diamond = Poset::boolean(2);
  CHECK(diamond.size() == 4);
  CHECK(diamond.height() == 2);
  CHECK(diamond.covers().size() == 4);
  CHECK(diamond.less(0, 3));
}

TEST_CASE("height") {
  CHECK(Poset::chain(3).height() == 3);
  CHECK(Poset::v().height() == 1);
  CHECK(Poset::antichain(5).height() == 0);
  CHECK(Poset::j().height() == 2);
}

TEST_CASE("chain(k) has exactly k covers") {
  for (int k = 0; k <= 6; ++k) {
    Poset c = Poset::chain(k);
    CHECK(c.height() == k);
    CHECK(static_cast<int>(c.covers().size()) == k);
  }
}

TEST_CASE("strict order is irreflexive and transitive") {
  for (const Poset& p :
       {Poset::j(), Poset::boolean(3), Poset::v(), Poset::chain(4)}) {
    for (int a = 0; a < p.size(); ++a) {
      CHECK_FALSE(p.less(a, a));
      for (int b = 0; b < p.size(); ++b)
        for (int c = 0; c < p.size(); ++c)
          if (p.less(a, b) && p.less(b, c)) CHECK(p.less(a, c));
    }
  }
}

TEST_CASE("linear extension respects the order and is deterministic") {
  Poset j = Poset::j();
  auto ext = j.linear_extension();
  CHECK(ext == std::vector<int>{0, 1, 2, 3});
  Poset lam = Poset::lambda();
  auto ext2 = lam.linear_extension();
  CHECK(ext2 == std::vector<int>{1, 2, 0});
  for (std::size_t i = 0; i < ext2.size(); ++i)
    for (std::size_t t = 0; t < i; ++t)
      CHECK_FALSE(lam.less(ext2[i], ext2[t]));
}
