// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion enforces its own wall-clock budget where one is stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "process.hpp"
#include "subgrp/arith.hpp"
#include "subgrp/classify.hpp"
#include "subgrp/counting.hpp"
#include "subgrp/oracle.hpp"
#include "subgrp/subgroup.hpp"
#include "subgrp/verify.hpp"

using namespace subgrp;
using arith::u64;
namespace cnt = subgrp::counting;

namespace {

bool contains_line(const std::string& text, const std::string& line) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::size_t len = (end == std::string::npos ? text.size() : end) - pos;
    if (text.compare(pos, len, line) == 0) return true;
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return false;
}

std::string figure_reproduction() {
  const auto cls = run_cli("classify 12 12 3 2 1");
  if (cls.exit_code != 0) return "classify exited with " + std::to_string(cls.exit_code);
  if (!contains_line(cls.out, "alpha=2 beta=12 exponent=12")) return "wrong invariants:\n" + cls.out;
  if (!contains_line(cls.out, "cyclic=no")) return "expected cyclic=no";
  if (!contains_line(cls.out, "subproduct=no")) return "expected subproduct=no";

  const auto ren = run_cli("render 12 12 3 2 1 --ascii");
  if (ren.exit_code != 0) return "render exited with " + std::to_string(ren.exit_code);
  std::set<std::pair<u64, u64>> want;
  for (u64 i = 0; i < 4; ++i)
    for (u64 j = 0; j < 12; ++j) want.insert({(3 * i + j) % 12, (2 * j) % 12});
  if (want.size() != 24) return "internal: expected 24 figure points";

  // rows are printed y = 11 .. 0; label width 2, cell width 3, glyph last in cell
  std::set<std::pair<u64, u64>> got;
  std::istringstream in(ren.out);
  std::string line;
  for (int row = 0; row < 12; ++row) {
    if (!std::getline(in, line)) return "render output truncated";
    const u64 y = 11 - row;
    if (line.size() != 2 + 12 * 3) return "unexpected row length: " + line;
    for (u64 x = 0; x < 12; ++x) {
      const char glyph = line[2 + 3 * x + 2];
      if (glyph == '*') got.insert({x, y});
      else if (glyph != '.') return "unexpected glyph in: " + line;
    }
  }
  if (got != want) return "bullet pattern differs from the 24 expected points";

  const auto uni = run_cli("render 12 12 3 2 1");
  std::size_t bullets = 0;
  const std::string g = "●";
  for (std::size_t p = uni.out.find(g); p != std::string::npos; p = uni.out.find(g, p + g.size()))
    ++bullets;
  if (bullets != 24) return "unicode rendering has " + std::to_string(bullets) + " bullets";
  return "";
}

std::string oracle_equivalence() {
  const auto results = verify::run_checks(400, 1);
  for (const auto& r : results)
    if (!r.pass) return r.name + " failed: " + r.detail;
  return "";
}

std::string variant_agreement() {
  for (u64 m = 1; m <= 60; ++m)
    for (u64 n = 1; n <= 60; ++n) {
      const u64 ws = cnt::s_total_gcd_sum(m, n);
      if (cnt::s_total_phi_tau(m, n) != ws) return "phi_tau differs at " + std::to_string(m);
      if (cnt::s_total_d_tau(m, n) != ws) return "d_tau differs";
      if (cnt::s_total_factored(m, n) != ws) return "factored differs";
      const u64 wc = cnt::c_cyclic_coprime_gcd_sum(m, n);
      if (cnt::c_cyclic_phi_gcd(m, n) != wc) return "phi_gcd differs";
      if (cnt::c_cyclic_mu_phi_tau(m, n) != wc) return "mu_phi_tau differs";
      if (cnt::c_cyclic_phi_d_tau(m, n) != wc) return "phi_d_tau differs";
      if (cnt::c_cyclic_mu_weighted(m, n) != wc) return "mu_weighted differs";
      for (u64 k : arith::divisors(m * n)) {
        const u64 wk = cnt::s_order_gcd_sum(m, n, k);
        if (cnt::s_order_phi_de(m, n, k) != wk) return "phi_de differs";
        if (cnt::s_order_phi_N(m, n, k) != wk) return "phi_N differs";
        if (cnt::s_order_factored(m, n, k) != wk) return "order factored differs";
      }
    }
  for (u64 n = 1; n <= 60; ++n) {
    const u64 ws = cnt::s_total(n, n);
    if (cnt::s_single_phi_tau_sq(n) != ws) return "single phi_tau_sq differs";
    if (cnt::s_single_d_tau_sq(n) != ws) return "single d_tau_sq differs";
    if (cnt::s_single_tau_psi(n) != ws) return "single tau_psi differs";
    const u64 wc = cnt::c_cyclic(n, n);
    if (cnt::c_single_d_2omega(n) != wc) return "single d_2omega differs";
    if (cnt::c_single_phi_tau_sq(n) != wc) return "single phi_tau_sq (cyclic) differs";
    if (cnt::c_single_psi_sum(n) != wc) return "single psi_sum differs";
    if (cnt::c_single_lcm_sum(n) != wc) return "single lcm_sum differs";
    for (u64 d : arith::divisors(n))
      if (cnt::count_exponent(n, d) != cnt::c_single(d)) return "exponent count differs";
  }
  return "";
}

std::string prime_power_forms() {
  for (u64 p : {2ULL, 3ULL, 5ULL})
    for (unsigned a = 0; a <= 6; ++a)
      for (unsigned b = a; b <= 6; ++b) {
        u64 pa = 1, pb = 1;
        for (unsigned i = 0; i < a; ++i) pa *= p;
        for (unsigned i = 0; i < b; ++i) pb *= p;
        if (cnt::s_prime_power(p, a, b) != cnt::s_total_gcd_sum(pa, pb))
          return "total form differs at p=" + std::to_string(p) + " a=" + std::to_string(a) +
                 " b=" + std::to_string(b);
        u64 pc = 1;
        for (unsigned c = 0; c <= a + b; ++c) {
          if (cnt::s_order_prime_power(p, a, b, c) != cnt::s_order_gcd_sum(pa, pb, pc))
            return "order form differs at p=" + std::to_string(p) + " a=" + std::to_string(a) +
                   " b=" + std::to_string(b) + " c=" + std::to_string(c);
          pc *= p;
        }
      }
  return "";
}

std::string partition_identities() {
  for (u64 m = 1; m <= 60; ++m)
    for (u64 n = 1; n <= 60; ++n) {
      u64 sum = 0;
      for (u64 k : arith::divisors(m * n)) sum += cnt::s_order(m, n, k);
      if (sum != cnt::s_total(m, n))
        return "order partition differs at (" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
  for (u64 n = 1; n <= 500; ++n) {
    u64 by_exponent = 0, by_cyclic = 0;
    for (u64 d : arith::divisors(n)) {
      by_exponent += cnt::count_exponent(n, d);
      by_cyclic += cnt::c_single(d);
    }
    if (by_exponent != cnt::s_single(n)) return "exponent partition differs at " + std::to_string(n);
    if (by_cyclic != cnt::s_single(n)) return "cyclic sum differs at " + std::to_string(n);
  }
  return "";
}

std::string multiplicativity() {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<u64> draw(1, 2000);
  int done = 0;
  while (done < 200) {
    const u64 m1 = draw(rng), n1 = draw(rng), m2 = draw(rng), n2 = draw(rng);
    if (std::gcd(m1 * n1, m2 * n2) != 1) continue;
    if (cnt::s_total(m1 * m2, n1 * n2) != cnt::s_total(m1, n1) * cnt::s_total(m2, n2))
      return "s not multiplicative at (" + std::to_string(m1) + "," + std::to_string(n1) + ")x(" +
             std::to_string(m2) + "," + std::to_string(n2) + ")";
    if (cnt::c_cyclic(m1 * m2, n1 * n2) != cnt::c_cyclic(m1, n1) * cnt::c_cyclic(m2, n2))
      return "c not multiplicative at (" + std::to_string(m1) + "," + std::to_string(n1) + ")x(" +
             std::to_string(m2) + "," + std::to_string(n2) + ")";
    ++done;
  }
  return "";
}

std::string zz_counts() {
  for (u64 n = 1; n <= 500; ++n) {
    u64 seen = 0;
    auto st = zz_enumerate(n);
    while (st.next()) ++seen;
    if (seen != arith::sigma(n)) return "lattice count differs at " + std::to_string(n);
  }
  const auto r = run_cli("zz --index 360 --count-only");
  if (r.out != std::to_string(arith::sigma(360)) + "\n") return "cli count differs at 360";
  return "";
}

std::string subproduct_counts() {
  for (u64 m = 1; m <= 30; ++m)
    for (u64 n = 1; n <= 30; ++n) {
      u64 total = 0, cyclic = 0;
      for (const auto& tr : all_triples({m, n})) {
        const auto inv = invariant_factors(tr);
        if (!inv.subproduct) continue;
        ++total;
        if (inv.cyclic) ++cyclic;
      }
      if (cnt::count_subproducts(m, n) != std::pair<u64, u64>{total, cyclic})
        return "subproduct counts differ at (" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
  return "";
}

std::string performance_count() {
  const auto r = run_cli("count 4611685975477714963 4611685975477714963");
  if (r.exit_code != 0) return "count exited with " + std::to_string(r.exit_code);
  if (r.out != "4611685988362616800\n") return "wrong count: " + r.out;
  return "";
}

std::string performance_enumerate() {
  const auto r = run_cli("enumerate 240 240 --format csv");
  if (r.exit_code != 0) return "enumerate exited with " + std::to_string(r.exit_code);
  const std::size_t lines = count_lines(r.out);
  if (lines != 3985) return "expected 3985 csv lines, got " + std::to_string(lines);
  return "";
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 means no stated budget
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "figure-reproduction", 1.0, figure_reproduction},
      {2, "oracle-equivalence", 60.0, oracle_equivalence},
      {3, "formula-variant-agreement", 120.0, variant_agreement},
      {4, "prime-power-closed-forms", 5.0, prime_power_forms},
      {5, "partition-identities", 0.0, partition_identities},
      {6, "multiplicativity", 0.0, multiplicativity},
      {7, "zz-lattice-counts", 0.0, zz_counts},
      {8, "subproduct-counts", 0.0, subproduct_counts},
      {9, "performance-count", 0.1, performance_count},
      {9, "performance-enumerate", 5.0, performance_enumerate},
  };

  bool all_pass = true;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string msg;
    try {
      msg = crit.run();
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (msg.empty() && crit.budget_s > 0 && elapsed > crit.budget_s) {
      std::ostringstream os;
      os << "over budget: " << elapsed << " s > " << crit.budget_s << " s";
      msg = os.str();
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
    std::cout << (msg.empty() ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << " "
              << crit.name << " (" << timing << ")";
    if (!msg.empty()) {
      std::cout << ": " << msg;
      all_pass = false;
    }
    std::cout << std::endl;
  }
  return all_pass ? 0 : 1;
}
