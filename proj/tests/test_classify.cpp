#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "subgrp/classify.hpp"
#include "subgrp/subgroup.hpp"

using namespace subgrp;
using arith::u128;
using arith::u64;

namespace {

u64 point_order(Point p, const Ambient& amb) {
  Point q = p;
  u64 ord = 1;
  while (!(q == Point{0, 0})) {
    q = {(q.x + p.x) % amb.m, (q.y + p.y) % amb.n};
    ++ord;
  }
  return ord;
}

}  // namespace

TEST_CASE("the twisted order-24 subgroup of Z12 x Z12") {
  const SubgroupTriple tr{{12, 12}, 3, 2, 1};
  const auto inv = invariant_factors(tr);
  CHECK(inv.alpha == 2);
  CHECK(inv.beta == 12);
  CHECK(inv.exponent == 12);
  CHECK_FALSE(inv.cyclic);
  CHECK_FALSE(inv.subproduct);
  CHECK(exponent_of(tr) == 12);
  CHECK_FALSE(is_cyclic(tr));
  CHECK_FALSE(subproduct_decomposition(tr).has_value());
}

TEST_CASE("edge subgroups") {
  const auto trivial = invariant_factors({{12, 18}, 12, 18, 0});
  CHECK(trivial == InvariantFactors{1, 1, 1, true, true});

  const auto whole = invariant_factors({{12, 12}, 1, 1, 0});
  CHECK(whole.alpha == 12);
  CHECK(whole.beta == 12);
  CHECK(whole.exponent == 12);
  CHECK_FALSE(whole.cyclic);
  CHECK(whole.subproduct);

  const auto diag = invariant_factors({{2, 2}, 2, 1, 1});
  CHECK(diag == InvariantFactors{1, 2, 2, true, false});

  CHECK(invariant_factors({{1, 1}, 1, 1, 0}) == InvariantFactors{1, 1, 1, true, true});
  CHECK_THROWS_AS(invariant_factors({{12, 12}, 5, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(exponent_of({{12, 12}, 3, 2, 3}), std::invalid_argument);
}

TEST_CASE("invariant factors are consistent with each other") {
  for (u64 m = 1; m <= 200; ++m)
    for (u64 n = 1; m * n <= 200; ++n)
      for (const auto& tr : all_triples({m, n})) {
        const auto view = view_of(tr);
        const auto inv = invariant_factors(tr);
        CHECK(inv.beta % inv.alpha == 0);
        CHECK(inv.alpha * inv.beta == view.order);
        CHECK(inv.exponent == inv.beta);
        CHECK(inv.exponent == exponent_of(tr));
        CHECK(inv.cyclic == (inv.alpha == 1));
        CHECK(inv.cyclic == is_cyclic(tr));
        CHECK(inv.subproduct == (tr.t == 0));
      }
}

TEST_CASE("exponent equals the lcm of element orders") {
  for (const Ambient amb : {Ambient{12, 12}, Ambient{8, 6}, Ambient{9, 3}, Ambient{16, 1}}) {
    for (const auto& tr : all_triples(amb)) {
      u64 want = 1;
      for (const Point& p : element_list(view_of(tr)))
        want = std::lcm(want, point_order(p, amb));
      CHECK(exponent_of(tr) == want);
    }
  }
}

TEST_CASE("cyclicity criteria") {
  // cyclic iff m/a, and the two layer counts along the second axis, share no factor
  for (u64 m = 1; m <= 200; ++m)
    for (u64 n = 1; m * n <= 200; ++n)
      for (const auto& tr : all_triples({m, n})) {
        const auto view = view_of(tr);
        const u64 inner = std::gcd(n / tr.b, u64(u128(n) * view.s / (u128(tr.a) * tr.b)));
        CHECK(is_cyclic(tr) == (std::gcd(m / tr.a, inner) == 1));
      }

  // square ambient shortcut: cyclic iff n * gcd(a, b, s) == a * b
  for (u64 n = 1; n <= 20; ++n)
    for (const auto& tr : all_triples({n, n})) {
      const auto view = view_of(tr);
      const bool shortcut = u128(n) * std::gcd(std::gcd(tr.a, tr.b), view.s) == u128(tr.a) * tr.b;
      CHECK(is_cyclic(tr) == shortcut);
    }
}

TEST_CASE("subproduct decomposition") {
  const auto dec = subproduct_decomposition({{12, 12}, 3, 2, 0});
  REQUIRE(dec.has_value());
  CHECK(dec->first == 4);
  CHECK(dec->second == 6);

  // t = 0 subgroups are exactly the axis-aligned grids a Z x b Z
  for (u64 m = 1; m <= 12; ++m)
    for (u64 n = 1; n <= 12; ++n)
      for (const auto& tr : all_triples({m, n})) {
        const auto got = subproduct_decomposition(tr);
        CHECK(got.has_value() == (tr.t == 0));
        if (!got) continue;
        CHECK(got->first == m / tr.a);
        CHECK(got->second == n / tr.b);
        std::set<Point> grid;
        for (u64 x = 0; x < m; x += tr.a)
          for (u64 y = 0; y < n; y += tr.b) grid.insert({x, y});
        const auto pts = element_list(view_of(tr));
        CHECK(grid == std::set<Point>(pts.begin(), pts.end()));
      }
}
