#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "subgrp/classify.hpp"
#include "subgrp/counting.hpp"
#include "subgrp/json_io.hpp"
#include "subgrp/subgroup.hpp"
#include "subgrp/verify.hpp"

namespace {

using subgrp::arith::u128;
using subgrp::arith::u64;

enum class Format { plain, json, csv };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return Format::plain;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

unsigned digits(u64 v) {
  unsigned d = 1;
  while (v >= 10) {
    v /= 10;
    ++d;
  }
  return d;
}

int run_count(u64 m, u64 n, subgrp::counting::QueryKind kind, std::optional<u64> param,
              bool all_variants, Format fmt) {
  const auto rep = subgrp::counting::evaluate({m, n, kind, param}, all_variants);
  if (fmt == Format::json) {
    nlohmann::json j = rep;
    std::cout << j.dump(2) << '\n';
  } else if (fmt == Format::csv) {
    std::cout << "m,n,kind,parameter,variant,value,agreed\n";
    for (const auto& [name, value] : rep.variants) {
      std::cout << m << ',' << n << ',' << subgrp::counting::to_string(kind) << ',';
      if (param) std::cout << *param;
      std::cout << ',' << name << ',' << value << ',' << yn(rep.agreed) << '\n';
    }
  } else if (all_variants) {
    std::cout << "value " << rep.value << '\n';
    for (const auto& [name, value] : rep.variants)
      std::cout << "variant " << name << ' ' << value << '\n';
    std::cout << "agreed " << yn(rep.agreed) << '\n';
  } else {
    std::cout << rep.value << '\n';
  }
  return rep.agreed ? 0 : 3;
}

struct EnumFilters {
  std::optional<u64> order;
  std::optional<u64> exponent;
  bool cyclic = false;
  bool subproduct = false;
};

int run_enumerate(u64 m, u64 n, const EnumFilters& f, Format fmt) {
  subgrp::require_valid(subgrp::Ambient{m, n});
  if (f.order && (*f.order == 0 || u128(m) * n % *f.order != 0))
    throw std::invalid_argument("order filter must divide m*n");
  if (f.exponent) {
    if (m != n) throw std::invalid_argument("exponent filter needs m = n");
    if (*f.exponent == 0 || n % *f.exponent != 0)
      throw std::invalid_argument("exponent filter must divide n");
  }

  if (fmt == Format::csv) std::cout << "m,n,a,b,t,s,order,index,alpha,beta,exponent,cyclic,subproduct\n";
  bool first = true;
  if (fmt == Format::json) std::cout << '[';

  auto stream = subgrp::enumerate_triples({m, n});
  while (auto tr = stream.next()) {
    const auto view = subgrp::view_of(*tr);
    if (f.order && view.order != *f.order) continue;
    const auto inv = subgrp::invariant_factors(*tr);
    if (f.exponent && inv.exponent != *f.exponent) continue;
    if (f.cyclic && !inv.cyclic) continue;
    if (f.subproduct && !inv.subproduct) continue;

    if (fmt == Format::csv) {
      std::cout << m << ',' << n << ',' << tr->a << ',' << tr->b << ',' << tr->t << ',' << view.s
                << ',' << view.order << ',' << view.index << ',' << inv.alpha << ',' << inv.beta
                << ',' << inv.exponent << ',' << (inv.cyclic ? 1 : 0) << ','
                << (inv.subproduct ? 1 : 0) << '\n';
    } else if (fmt == Format::json) {
      nlohmann::json j = *tr;
      j["s"] = view.s;
      j["order"] = view.order;
      j["index"] = view.index;
      j["alpha"] = inv.alpha;
      j["beta"] = inv.beta;
      j["exponent"] = inv.exponent;
      j["cyclic"] = inv.cyclic;
      j["subproduct"] = inv.subproduct;
      std::cout << (first ? "\n  " : ",\n  ") << j.dump();
    } else {
      std::cout << "a=" << tr->a << " b=" << tr->b << " t=" << tr->t << " s=" << view.s
                << " order=" << view.order << " index=" << view.index << " alpha=" << inv.alpha
                << " beta=" << inv.beta << " exponent=" << inv.exponent
                << " cyclic=" << yn(inv.cyclic) << " subproduct=" << yn(inv.subproduct) << '\n';
    }
    first = false;
  }
  if (fmt == Format::json) std::cout << (first ? "]\n" : "\n]\n");
  return 0;
}

int run_classify(const subgrp::SubgroupTriple& tr, Format fmt) {
  const auto view = subgrp::view_of(tr);
  const auto inv = subgrp::invariant_factors(tr);
  if (fmt == Format::json) {
    nlohmann::json j;
    j["triple"] = tr;
    j["s"] = view.s;
    j["order"] = view.order;
    j["index"] = view.index;
    j["invariants"] = inv;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "m=" << tr.ambient.m << " n=" << tr.ambient.n << " a=" << tr.a << " b=" << tr.b
            << " t=" << tr.t << '\n';
  std::cout << "s=" << view.s << " order=" << view.order << " index=" << view.index << '\n';
  std::cout << "alpha=" << inv.alpha << " beta=" << inv.beta << " exponent=" << inv.exponent
            << '\n';
  std::cout << "cyclic=" << yn(inv.cyclic) << '\n';
  std::cout << "subproduct=" << yn(inv.subproduct) << '\n';
  if (auto dec = subgrp::subproduct_decomposition(tr))
    std::cout << "decomposition=Z" << dec->first << "xZ" << dec->second << '\n';
  return 0;
}

int run_render(const subgrp::SubgroupTriple& tr, bool ascii, unsigned min_width) {
  const auto view = subgrp::view_of(tr);
  const u64 m = tr.ambient.m, n = tr.ambient.n;
  const unsigned label_w = digits(n - 1);
  unsigned cell_w = digits(m - 1) + 1;
  if (min_width > cell_w) cell_w = min_width;
  const char* on = ascii ? "*" : "●";
  const char* off = ascii ? "." : "·";

  std::string line;
  for (u64 y = n; y-- > 0;) {
    const std::string lab = std::to_string(y);
    line.assign(label_w - lab.size(), ' ');
    line += lab;
    for (u64 x = 0; x < m; ++x) {
      line.append(cell_w - 1, ' ');
      line += subgrp::contains(view, {x, y}) ? on : off;
    }
    std::cout << line << '\n';
  }
  line.assign(label_w, ' ');
  for (u64 x = 0; x < m; ++x) {
    const std::string lab = std::to_string(x);
    line.append(cell_w - lab.size(), ' ');
    line += lab;
  }
  std::cout << line << '\n';
  return 0;
}

int run_verify(u64 max_product, u64 seed) {
  if (max_product == 0 || max_product > 400)
    throw std::invalid_argument("max product must be between 1 and 400");
  const auto results = subgrp::verify::run_checks(max_product, seed);
  u64 failed = 0, cases = 0;
  for (const auto& r : results) {
    cases += r.cases;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.cases << " cases)";
    if (!r.pass) {
      std::cout << ": " << r.detail;
      ++failed;
    }
    std::cout << '\n';
  }
  u64 ambients = 0;
  for (u64 m = 1; m <= max_product; ++m) ambients += max_product / m;
  if (failed == 0) {
    std::cout << "all " << results.size() << " checks passed, " << cases << " cases over "
              << ambients << " ambients\n";
    return 0;
  }
  std::cout << failed << " of " << results.size() << " checks failed\n";
  return 1;
}

int run_zz(u64 index, bool count_only) {
  if (count_only) {
    std::cout << subgrp::arith::sigma(index) << '\n';
    return 0;
  }
  auto stream = subgrp::zz_enumerate(index);
  while (auto tr = stream.next())
    std::cout << "a=" << tr->a << " b=" << tr->b << " s=" << tr->s << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"subgroups of Z_m x Z_n: count, enumerate, classify, render, verify"};
  app.require_subcommand(1);

  std::string format = "plain";
  u64 m = 1, n = 1, a = 1, b = 1, t = 0;
  u64 order_k = 0, expo_d = 0, max_product = 144, seed = 1, zz_index = 1;
  bool flag_cyclic = false, flag_subproducts = false, all_variants = false;
  bool ascii = false, count_only = false;
  unsigned width = 0;

  auto* cmd_count = app.add_subcommand("count", "count subgroups with closed formulas");
  cmd_count->add_option("m", m, "first modulus")->required();
  cmd_count->add_option("n", n, "second modulus")->required();
  auto* opt_order = cmd_count->add_option("--order", order_k, "count only subgroups of this order");
  auto* opt_cyc = cmd_count->add_flag("--cyclic", flag_cyclic, "count only cyclic subgroups");
  auto* opt_expo =
      cmd_count->add_option("--exponent", expo_d, "count only this exponent (needs m = n)");
  auto* opt_sub =
      cmd_count->add_flag("--subproducts", flag_subproducts, "count only subproducts");
  opt_order->excludes(opt_cyc)->excludes(opt_expo)->excludes(opt_sub);
  opt_expo->excludes(opt_cyc)->excludes(opt_sub);
  cmd_count->add_flag("--all-variants", all_variants, "evaluate and compare every formula");
  cmd_count->add_option("--format", format, "plain, json or csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  EnumFilters filters;
  auto* cmd_enum = app.add_subcommand("enumerate", "list subgroups as canonical triples");
  cmd_enum->add_option("m", m, "first modulus")->required();
  cmd_enum->add_option("n", n, "second modulus")->required();
  cmd_enum->add_option("--order", order_k, "only subgroups of this order");
  cmd_enum->add_option("--exponent", expo_d, "only subgroups of this exponent (needs m = n)");
  cmd_enum->add_flag("--cyclic", filters.cyclic, "only cyclic subgroups");
  cmd_enum->add_flag("--subproduct", filters.subproduct, "only subproducts");
  cmd_enum->add_option("--format", format, "plain, json or csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  auto* cmd_classify = app.add_subcommand("classify", "invariant factors of one subgroup");
  cmd_classify->add_option("m", m, "first modulus")->required();
  cmd_classify->add_option("n", n, "second modulus")->required();
  cmd_classify->add_option("a", a, "first divisor")->required();
  cmd_classify->add_option("b", b, "second divisor")->required();
  cmd_classify->add_option("t", t, "twist")->required();
  cmd_classify->add_option("--format", format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  auto* cmd_render = app.add_subcommand("render", "draw one subgroup as a text grid");
  cmd_render->add_option("m", m, "first modulus")->required();
  cmd_render->add_option("n", n, "second modulus")->required();
  cmd_render->add_option("a", a, "first divisor")->required();
  cmd_render->add_option("b", b, "second divisor")->required();
  cmd_render->add_option("t", t, "twist")->required();
  cmd_render->add_flag("--ascii", ascii, "use '*' and '.' instead of unicode bullets");
  cmd_render->add_option("--width", width, "minimum cell width");

  auto* cmd_verify = app.add_subcommand("verify", "cross-check formulas against brute force");
  cmd_verify->add_option("--max-product", max_product, "check all ambients with m*n up to this");
  cmd_verify->add_option("--seed", seed, "seed for the randomized checks");

  auto* cmd_zz = app.add_subcommand("zz", "finite-index sublattices of Z x Z");
  cmd_zz->add_option("--index", zz_index, "sublattice index")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_zz->add_flag("--count-only", count_only, "print only the number of sublattices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format fmt = parse_format(format);
    if (cmd_count->parsed()) {
      using subgrp::counting::QueryKind;
      QueryKind kind = QueryKind::total;
      std::optional<u64> param;
      if (opt_order->count()) {
        kind = QueryKind::order;
        param = order_k;
      } else if (opt_expo->count()) {
        kind = QueryKind::exponent;
        param = expo_d;
      } else if (flag_cyclic && flag_subproducts) {
        kind = QueryKind::cyclic_subproducts;
      } else if (flag_cyclic) {
        kind = QueryKind::cyclic;
      } else if (flag_subproducts) {
        kind = QueryKind::subproducts;
      }
      return run_count(m, n, kind, param, all_variants, fmt);
    }
    if (cmd_enum->parsed()) {
      if (cmd_enum->count("--order")) filters.order = order_k;
      if (cmd_enum->count("--exponent")) filters.exponent = expo_d;
      return run_enumerate(m, n, filters, fmt);
    }
    if (cmd_classify->parsed()) return run_classify({{m, n}, a, b, t}, fmt);
    if (cmd_render->parsed()) return run_render({{m, n}, a, b, t}, ascii, width);
    if (cmd_verify->parsed()) return run_verify(max_product, seed);
    if (cmd_zz->parsed()) return run_zz(zz_index, count_only);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
