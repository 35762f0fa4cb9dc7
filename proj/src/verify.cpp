#include "subgrp/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "subgrp/classify.hpp"
#include "subgrp/counting.hpp"
#include "subgrp/oracle.hpp"
#include "subgrp/subgroup.hpp"

namespace subgrp::verify {
namespace {

using arith::u128;

struct Check {
  CheckResult result;
  explicit Check(std::string name) { result.name = std::move(name); }
  template <typename DetailFn>
  void expect(bool ok, DetailFn&& detail) {
    ++result.cases;
    if (!ok && result.pass) {
      result.pass = false;
      result.detail = detail();
    }
  }
};

std::string amb_str(u64 m, u64 n) {
  std::ostringstream os;
  os << "(m=" << m << ", n=" << n << ")";
  return os.str();
}

std::string triple_str(const SubgroupTriple& tr) {
  std::ostringstream os;
  os << "(m=" << tr.ambient.m << ", n=" << tr.ambient.n << ", a=" << tr.a << ", b=" << tr.b
     << ", t=" << tr.t << ")";
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_checks(u64 max_product, u64 seed) {
  if (max_product == 0) throw std::invalid_argument("max product must be positive");

  Check sets("oracle-subgroup-sets");
  Check total("oracle-total-count");
  Check order_counts("oracle-order-counts");
  Check cyclic_count("oracle-cyclic-count");
  Check exponent_counts("oracle-exponent-counts");
  Check roundtrip("triple-roundtrip");
  Check grid("contains-grid");
  Check variants("variant-agreement");
  Check order_partition("order-partition");
  Check exponent_partition("exponent-partition");
  Check total_cyclic("total-cyclic-relation");
  Check multiplicative("multiplicativity");
  Check zz("zz-index-count");
  Check subproducts("subproduct-counts");

  for (u64 m = 1; m <= max_product; ++m) {
    for (u64 n = 1; m * n <= max_product; ++n) {
      const Ambient amb{m, n};
      const auto subs = oracle::all_subgroups(amb, max_product);
      const auto triples = all_triples(amb);

      // element sets of the named subgroups, ordered like the oracle output
      std::vector<std::vector<Point>> named;
      named.reserve(triples.size());
      for (const auto& tr : triples) {
        auto pts = element_list(view_of(tr));
        std::sort(pts.begin(), pts.end());
        named.push_back(std::move(pts));
      }
      std::sort(named.begin(), named.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
        return lhs < rhs;
      });
      bool same = named.size() == subs.size();
      for (std::size_t i = 0; same && i < named.size(); ++i) same = named[i] == subs[i].elements;
      sets.expect(same, [&] { return "element sets differ at " + amb_str(m, n); });

      total.expect(subs.size() == counting::s_total(m, n),
                   [&] { return "oracle count differs at " + amb_str(m, n); });
      total.expect(subs.size() == counting::s_total_gcd_sum(m, n),
                   [&] { return "gcd-sum count differs at " + amb_str(m, n); });

      std::map<u64, u64> by_order, by_exponent;
      u64 cyclic_seen = 0;
      for (const auto& sub : subs) {
        ++by_order[sub.elements.size()];
        if (m == n) ++by_exponent[oracle::direct_exponent(sub)];
        if (oracle::direct_is_cyclic(sub)) ++cyclic_seen;
      }
      for (u64 k : arith::divisors(m * n)) {
        const u64 want = by_order.count(k) ? by_order.at(k) : 0;
        order_counts.expect(counting::s_order(m, n, k) == want, [&] {
          return "order " + std::to_string(k) + " count differs at " + amb_str(m, n);
        });
      }
      cyclic_count.expect(counting::c_cyclic(m, n) == cyclic_seen,
                          [&] { return "cyclic count differs at " + amb_str(m, n); });
      if (m == n) {
        for (u64 d : arith::divisors(n)) {
          const u64 want = by_exponent.count(d) ? by_exponent.at(d) : 0;
          exponent_counts.expect(counting::count_exponent(n, d) == want, [&] {
            return "exponent " + std::to_string(d) + " count differs at " + amb_str(m, n);
          });
        }
      }

      for (const auto& tr : triples) {
        const auto pts = element_list(view_of(tr));
        roundtrip.expect(canonicalize(amb, pts) == tr,
                         [&] { return "closure roundtrip broke " + triple_str(tr); });
        roundtrip.expect(detail::canonicalize_reduction(amb, pts) == tr,
                         [&] { return "reduction roundtrip broke " + triple_str(tr); });
      }

      if (m * n <= 144) {
        for (const auto& tr : triples) {
          const auto view = view_of(tr);
          auto pts = element_list(view);
          std::sort(pts.begin(), pts.end());
          bool ok = true;
          for (u64 y = 0; ok && y < n; ++y) {
            for (u64 x = 0; ok && x < m; ++x) {
              const Point p{x, y};
              ok = contains(view, p) == std::binary_search(pts.begin(), pts.end(), p);
            }
          }
          grid.expect(ok, [&] { return "membership mismatch for " + triple_str(tr); });
        }
      }

      auto check_variants = [&](counting::QueryKind kind, std::optional<u64> param) {
        const auto rep = counting::evaluate({m, n, kind, param}, true);
        variants.expect(rep.agreed, [&] {
          return std::string(counting::to_string(kind)) + " variants disagree at " + amb_str(m, n);
        });
      };
      check_variants(counting::QueryKind::total, std::nullopt);
      check_variants(counting::QueryKind::cyclic, std::nullopt);
      check_variants(counting::QueryKind::subproducts, std::nullopt);
      check_variants(counting::QueryKind::cyclic_subproducts, std::nullopt);
      u64 order_sum = 0;
      for (u64 k : arith::divisors(m * n)) {
        check_variants(counting::QueryKind::order, k);
        order_sum += counting::s_order(m, n, k);
      }
      order_partition.expect(order_sum == counting::s_total(m, n),
                             [&] { return "order partition differs at " + amb_str(m, n); });
      if (m == n)
        for (u64 d : arith::divisors(n)) check_variants(counting::QueryKind::exponent, d);

      u64 sub_total = 0, sub_cyclic = 0;
      for (const auto& tr : triples) {
        if (tr.t != 0) continue;
        ++sub_total;
        if (invariant_factors(tr).cyclic) ++sub_cyclic;
      }
      const auto want_sub = counting::count_subproducts(m, n);
      subproducts.expect(sub_total == want_sub.first && sub_cyclic == want_sub.second, [&] {
        return "subproduct counts differ at " + amb_str(m, n);
      });
    }
  }

  for (u64 n = 1; n <= max_product; ++n) {
    u64 expo_sum = 0;
    for (u64 d : arith::divisors(n)) expo_sum += counting::count_exponent(n, d);
    exponent_partition.expect(expo_sum == counting::s_single(n), [&] {
      return "exponent partition differs at n=" + std::to_string(n);
    });
    u64 cyc_sum = 0;
    for (u64 d : arith::divisors(n)) cyc_sum += counting::c_single(d);
    total_cyclic.expect(cyc_sum == counting::s_single(n),
                        [&] { return "cyclic sum differs at n=" + std::to_string(n); });
    u64 seen = 0;
    ZZStream st = zz_enumerate(n);
    while (auto tr = st.next()) {
      if (tr->a * tr->b != n || tr->s >= tr->a) {
        zz.expect(false, [&] { return "bad lattice triple at index " + std::to_string(n); });
      }
      ++seen;
    }
    zz.expect(seen == arith::sigma(n),
              [&] { return "lattice count differs at index " + std::to_string(n); });
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> draw(1, 1000);
  for (int i = 0; i < 200; ++i) {
    u64 m1 = draw(rng), n1 = draw(rng), m2 = draw(rng), n2 = draw(rng);
    while (std::gcd(m1 * n1, m2 * n2) != 1) {
      m2 = draw(rng);
      n2 = draw(rng);
    }
    const bool ok_s =
        counting::s_total(m1 * m2, n1 * n2) == counting::s_total(m1, n1) * counting::s_total(m2, n2);
    const bool ok_c =
        counting::c_cyclic(m1 * m2, n1 * n2) == counting::c_cyclic(m1, n1) * counting::c_cyclic(m2, n2);
    multiplicative.expect(ok_s && ok_c, [&] {
      return "multiplicativity broke at (" + std::to_string(m1) + "," + std::to_string(n1) +
             ")x(" + std::to_string(m2) + "," + std::to_string(n2) + ")";
    });
  }

  return {sets.result,          total.result,       order_counts.result,
          cyclic_count.result,  exponent_counts.result, roundtrip.result,
          grid.result,          variants.result,    order_partition.result,
          exponent_partition.result, total_cyclic.result, multiplicative.result,
          zz.result,            subproducts.result};
}

}  // namespace subgrp::verify
