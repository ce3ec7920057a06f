#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "abelian/group.hpp"
#include "abelian/subgroup.hpp"
#include "test_util.hpp"

using namespace abelian;

TEST_CASE("construction validates moduli") {
  CHECK(FinAbGroup({4, 2}).order() == 8);
  CHECK(FinAbGroup::trivial().order() == 1);
  CHECK_THROWS_AS(FinAbGroup({1}), std::invalid_argument);
  CHECK_THROWS_AS(FinAbGroup({4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FinAbGroup({-3}), std::invalid_argument);
}

TEST_CASE("element arithmetic on pinned examples") {
  FinAbGroup g({4, 2});
  CHECK(g.add(g.element({3, 1}), g.element({1, 1})) == g.zero());
  CHECK(g.add(g.element({1, 0}), g.element({1, 1})) == g.element({2, 1}));
  CHECK(g.add(g.element({1, 1}), g.zero()) == g.element({1, 1}));
  CHECK(g.scalar_mul(2, g.element({1, 1})) == g.element({2, 0}));

  FinAbGroup z6({6});
  CHECK(z6.neg(z6.element({2})) == z6.element({4}));
  CHECK(z6.scalar_mul(3, z6.element({2})) == z6.zero());
  CHECK(z6.scalar_mul(-1, z6.element({2})) == z6.element({4}));

  CHECK_THROWS_AS(g.add(g.element({0, 0}), z6.element({1})), std::invalid_argument);
}

TEST_CASE("element_order on pinned examples") {
  CHECK(FinAbGroup({8}).element_order(FinAbGroup({8}).element({1})) == 8);
  CHECK(FinAbGroup({12}).element_order(FinAbGroup({12}).element({3})) == 4);
  FinAbGroup g({2, 4});
  CHECK(g.element_order(g.element({1, 1})) == 4);
  CHECK(g.element_order(g.zero()) == 1);
}

TEST_CASE("group axioms hold exhaustively on small groups") {
  for (const FinAbGroup& g :
       {FinAbGroup({4, 2}), FinAbGroup({3, 3}), FinAbGroup({8}), FinAbGroup({2, 2, 2})}) {
    auto elems = g.elements();
    REQUIRE(static_cast<std::int64_t>(elems.size()) == g.order());
    for (const auto& x : elems) {
      CHECK(g.add(x, g.zero()) == x);
      CHECK(g.add(x, g.neg(x)) == g.zero());
      for (const auto& y : elems) {
        CHECK(g.add(x, y) == g.add(y, x));
        for (const auto& z : elems)
          CHECK(g.add(x, g.add(y, z)) == g.add(g.add(x, y), z));
      }
    }
  }
}

TEST_CASE("element orders divide the group order and match brute force") {
  testutil::Rng rng(0x0a0b0c0du);
  for (int trial = 0; trial < 12; ++trial) {
    FinAbGroup g = testutil::random_group(rng, 64);
    for (const auto& x : g.elements()) {
      std::int64_t order = g.element_order(x);
      CHECK(g.order() % order == 0);  // Lagrange
      // least n >= 1 with n*x = 0, the slow way
      GroupElement acc = x;
      std::int64_t n = 1;
      while (!acc.is_zero()) {
        acc = g.add(acc, x);
        ++n;
      }
      CHECK(order == n);
    }
  }
}

TEST_CASE("pointed groups require a nonzero point in a nontrivial group") {
  FinAbGroup g({4});
  CHECK_NOTHROW(PointedGroup(g, g.element({2})));
  CHECK_THROWS_AS(PointedGroup(g, g.zero()), std::invalid_argument);
  CHECK_THROWS_AS(PointedGroup(FinAbGroup::trivial(), FinAbGroup::trivial().zero()),
                  std::invalid_argument);
  CHECK_THROWS_AS(PointedGroup(g, FinAbGroup({2, 2}).element({1, 1})), std::invalid_argument);
}

TEST_CASE("canonical invariant factors on pinned examples") {
  CHECK(canonical_invariant_factors(FinAbGroup({2, 3})) == std::vector<std::int64_t>{6});
  CHECK(canonical_invariant_factors(FinAbGroup({2, 4})) == std::vector<std::int64_t>{2, 4});
  CHECK(canonical_invariant_factors(FinAbGroup({4, 6})) == std::vector<std::int64_t>{2, 12});
  CHECK(canonical_invariant_factors(FinAbGroup::trivial()).empty());
  // the canonical list obeys the divisibility chain and preserves the order
  auto factors = canonical_invariant_factors(FinAbGroup({6, 10, 15}));
  std::int64_t product = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    product *= factors[i];
    if (i) CHECK(factors[i] % factors[i - 1] == 0);
  }
  CHECK(product == 900);
}

TEST_CASE("invariant factors are an isomorphism invariant at desk scale") {
  // same group in shuffled coordinates
  CHECK(canonical_invariant_factors(FinAbGroup({2, 3})) ==
        canonical_invariant_factors(FinAbGroup({6})));
  CHECK(canonical_invariant_factors(FinAbGroup({4, 3, 5})) ==
        canonical_invariant_factors(FinAbGroup({60})));

  // distinct classes of equal order have distinct element-order multisets,
  // and equal factor lists correspond to equal multisets
  for (std::int64_t n = 2; n <= 64; ++n) {
    auto classes = abelian_groups_of_order(n);
    std::vector<std::map<std::int64_t, int>> order_stats;
    for (const auto& g : classes) {
      std::map<std::int64_t, int> stats;
      for (const auto& x : g.elements()) stats[g.element_order(x)]++;
      order_stats.push_back(std::move(stats));
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        CHECK(canonical_invariant_factors(classes[i]) !=
              canonical_invariant_factors(classes[j]));
        CHECK(order_stats[i] != order_stats[j]);
      }
  }
}

TEST_CASE("primary_component on pinned examples") {
  FinAbGroup z12({12});
  Subgroup two_part = primary_component(z12, 2);
  CHECK(two_part.elements() ==
        std::vector<GroupElement>{z12.element({0}), z12.element({3}), z12.element({6}),
                                  z12.element({9})});
  // cyclic of order 4: some element generates the whole component
  CHECK(z12.element_order(z12.element({3})) == 4);
  CHECK(primary_component(z12, 5).elements() == std::vector<GroupElement>{z12.zero()});

  FinAbGroup klein({2, 2});
  CHECK(primary_component(klein, 2).order() == klein.order());

  CHECK_THROWS_AS(primary_component(z12, 4), std::invalid_argument);
}

TEST_CASE("primary_component is the full p-part and is closed") {
  testutil::Rng rng(0x77aa88bbu);
  for (int trial = 0; trial < 10; ++trial) {
    FinAbGroup g = testutil::random_group(rng, 72);
    for (std::int64_t p : {2, 3, 5}) {
      Subgroup comp = primary_component(g, p);
      std::int64_t p_part = 1;
      std::int64_t n = g.order();
      while (n % p == 0) {
        n /= p;
        p_part *= p;
      }
      CHECK(comp.order() == p_part);
      for (const auto& x : comp.elements()) {
        CHECK(comp.contains(g.neg(x)));
        auto order_factors = factorize(g.element_order(x));
        for (auto [q, e] : order_factors) CHECK(q == p);
        for (const auto& y : comp.elements()) CHECK(comp.contains(g.add(x, y)));
      }
    }
  }
}

TEST_CASE("abelian_groups_of_order enumerates isomorphism classes") {
  auto of4 = abelian_groups_of_order(4);
  REQUIRE(of4.size() == 2);
  CHECK(of4[0].moduli() == std::vector<std::int64_t>{4});
  CHECK(of4[1].moduli() == std::vector<std::int64_t>{2, 2});

  auto of1 = abelian_groups_of_order(1);
  REQUIRE(of1.size() == 1);
  CHECK(of1[0].is_trivial());

  auto of12 = abelian_groups_of_order(12);
  REQUIRE(of12.size() == 2);
  CHECK(of12[0].moduli() == std::vector<std::int64_t>{4, 3});
  CHECK(of12[1].moduli() == std::vector<std::int64_t>{2, 2, 3});

  // partition-count property, and pairwise non-isomorphic representatives
  for (std::int64_t n = 1; n <= 128; ++n) {
    auto classes = abelian_groups_of_order(n);
    std::size_t expected = 1;
    for (auto [p, e] : factorize(n)) expected *= partitions(e).size();
    CHECK(classes.size() == expected);
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& g : classes) {
      CHECK(g.order() == n);
      CHECK(seen.insert(canonical_invariant_factors(g)).second);
    }
  }
}
