#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "subgrp/oracle.hpp"
#include "subgrp/subgroup.hpp"

using namespace subgrp;
using arith::u64;

TEST_CASE("smallest ambients by hand") {
  const auto one = oracle::all_subgroups({1, 1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].elements == std::vector<Point>{{0, 0}});

  // Z2 x Z2: trivial, three order-2 lines, everything
  const auto klein = oracle::all_subgroups({2, 2});
  REQUIRE(klein.size() == 5);
  CHECK(klein[0].elements == std::vector<Point>{{0, 0}});
  std::set<std::vector<Point>> middles(
      {klein[1].elements, klein[2].elements, klein[3].elements});
  const std::set<std::vector<Point>> want{{{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}};
  CHECK(middles == want);
  CHECK(klein[4].elements.size() == 4);

  CHECK(oracle::all_subgroups({12, 12}).size() == 90);
  CHECK(oracle::all_subgroups({3, 4}).size() == 6);  // cyclic of order 12: tau(12)
}

TEST_CASE("limit guard") {
  CHECK_THROWS_AS(oracle::all_subgroups({21, 20}), std::invalid_argument);
  CHECK_THROWS_AS(oracle::all_subgroups({5, 5}, 24), std::invalid_argument);
  CHECK(oracle::all_subgroups({5, 5}, 25).size() == 8);
}

TEST_CASE("every oracle subgroup is closed and of Lagrange order") {
  for (const Ambient amb : {Ambient{12, 12}, Ambient{8, 6}, Ambient{16, 9}}) {
    const auto subs = oracle::all_subgroups(amb);
    for (const auto& sub : subs) {
      CHECK(amb.m * amb.n % sub.elements.size() == 0);
      const std::set<Point> set(sub.elements.begin(), sub.elements.end());
      CHECK(set.count({0, 0}) == 1);
      CHECK(set.size() == sub.elements.size());
      for (const auto& p : sub.elements)
        for (const auto& q : sub.elements)
          CHECK(set.count({(p.x + q.x) % amb.m, (p.y + q.y) % amb.n}) == 1);
    }
    // all distinct
    std::set<std::vector<Point>> dedup;
    for (const auto& sub : subs) dedup.insert(sub.elements);
    CHECK(dedup.size() == subs.size());
  }
}

TEST_CASE("direct element orders") {
  CHECK(oracle::direct_order({0, 0}, {12, 12}) == 1);
  CHECK(oracle::direct_order({1, 0}, {12, 12}) == 12);
  CHECK(oracle::direct_order({3, 2}, {12, 12}) == 12);
  CHECK(oracle::direct_order({6, 4}, {12, 12}) == 6);
  CHECK(oracle::direct_order({1, 1}, {2, 3}) == 6);
}

TEST_CASE("direct exponent and cyclicity") {
  const auto subs = oracle::all_subgroups({12, 12});
  for (const auto& sub : subs) {
    const u64 e = oracle::direct_exponent(sub);
    CHECK(sub.elements.size() % e == 0);
    bool witness = false;
    for (const auto& p : sub.elements)
      witness = witness || oracle::direct_order(p, sub.ambient) == sub.elements.size();
    CHECK(oracle::direct_is_cyclic(sub) == witness);
  }
}

TEST_CASE("oracle agrees with the triple representation set-for-set") {
  for (u64 m = 1; m <= 144; ++m)
    for (u64 n = 1; m * n <= 144; ++n) {
      const Ambient amb{m, n};
      const auto subs = oracle::all_subgroups(amb);
      std::set<std::vector<Point>> from_oracle;
      for (const auto& sub : subs) from_oracle.insert(sub.elements);
      std::set<std::vector<Point>> from_triples;
      for (const auto& tr : all_triples(amb)) {
        auto pts = element_list(view_of(tr));
        std::sort(pts.begin(), pts.end());
        from_triples.insert(std::move(pts));
      }
      CHECK(from_oracle == from_triples);
    }
}
