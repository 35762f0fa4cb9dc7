#pragma once

#include <optional>
#include <utility>

#include "subgrp/subgroup.hpp"

namespace subgrp {

/// Structure of one subgroup: H ~ Z_alpha x Z_beta with alpha | beta,
/// alpha * beta = order, exponent = beta. cyclic iff alpha == 1,
/// subproduct (a direct product of subgroups of the two axes) iff t == 0.
struct InvariantFactors {
  u64 alpha = 1;
  u64 beta = 1;
  u64 exponent = 1;
  bool cyclic = true;
  bool subproduct = true;
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

InvariantFactors invariant_factors(const SubgroupTriple& triple);

/// Least e with e*h = 0 for all h in the subgroup; equals beta.
u64 exponent_of(const SubgroupTriple& triple);

bool is_cyclic(const SubgroupTriple& triple);

/// For t == 0 the subgroup splits as <a> x <b> ~ Z_{m/a} x Z_{n/b};
/// returns (m/a, n/b), or nothing when t > 0.
std::optional<std::pair<u64, u64>> subproduct_decomposition(const SubgroupTriple& triple);

}  // namespace subgrp
