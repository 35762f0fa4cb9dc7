#include "subgrp/classify.hpp"

#include <limits>
#include <numeric>

namespace subgrp {
namespace {

using arith::u128;

u64 second_axis_count(const SubgroupTriple& tr, u64 s) {
  // number of subgroup points on the vertical axis: gcd(n/b, ns/(ab));
  // ns/(ab) is computed as (n/b)*s / a, which is exact
  const u64 nb = tr.ambient.n / tr.b;
  const u128 prod = u128(nb) * s;
  if (prod % tr.a != 0) throw std::logic_error("classify: (n/b)s/a is not integral");
  return std::gcd(nb, u64(prod / tr.a));
}

}  // namespace

InvariantFactors invariant_factors(const SubgroupTriple& tr) {
  require_valid(tr);
  const u64 m = tr.ambient.m, n = tr.ambient.n;
  const u64 g = std::gcd(tr.a, n / tr.b);
  const u64 s = tr.t * (tr.a / g);
  const u64 alpha = std::gcd(m / tr.a, second_axis_count(tr, s));
  const u64 order = arith::checked_mul(m / tr.a, n / tr.b);
  const u64 beta = order / alpha;
  return InvariantFactors{alpha, beta, beta, alpha == 1, tr.t == 0};
}

u64 exponent_of(const SubgroupTriple& tr) {
  require_valid(tr);
  const u64 m = tr.ambient.m, n = tr.ambient.n;
  const u64 g = std::gcd(tr.a, n / tr.b);
  const u64 s = tr.t * (tr.a / g);
  const u128 d = arith::gcd_u128(arith::gcd_u128(u128(m) * tr.b, u128(n) * tr.a), u128(n) * s);
  const u128 beta = u128(m) * n / d;
  if (beta > std::numeric_limits<u64>::max())
    throw std::overflow_error("subgroup exponent exceeds 64 bits");
  return u64(beta);
}

bool is_cyclic(const SubgroupTriple& tr) { return invariant_factors(tr).alpha == 1; }

std::optional<std::pair<u64, u64>> subproduct_decomposition(const SubgroupTriple& tr) {
  require_valid(tr);
  if (tr.t != 0) return std::nullopt;
  return std::make_pair(tr.ambient.m / tr.a, tr.ambient.n / tr.b);
}

}  // namespace subgrp
