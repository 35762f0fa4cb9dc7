#pragma once

#include <vector>

#include "subgrp/subgroup.hpp"

namespace subgrp::oracle {

/// A subgroup found by brute force: its full element set, sorted.
/// Deliberately knows nothing about triples or counting formulas;
/// everything here works from the group operation alone.
struct RawSubgroup {
  Ambient ambient;
  std::vector<Point> elements;
};

/// Every subgroup of Z_m x Z_n, found by closing generator pairs.
/// Duplicate-free, sorted by (size, lexicographic element list).
/// Requires m*n <= limit.
std::vector<RawSubgroup> all_subgroups(const Ambient& ambient, u64 limit = 400);

/// Order of a point by repeated addition.
u64 direct_order(Point g, const Ambient& ambient);

/// Least common multiple of the element orders.
u64 direct_exponent(const RawSubgroup& subgroup);

/// True iff some element's order equals the subgroup size.
bool direct_is_cyclic(const RawSubgroup& subgroup);

}  // namespace subgrp::oracle
