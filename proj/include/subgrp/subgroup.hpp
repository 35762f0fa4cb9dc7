#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "subgrp/arith.hpp"

namespace subgrp {

using arith::u64;

/// The ambient group Z_m x Z_n; both orders must be positive.
struct Ambient {
  u64 m = 1;
  u64 n = 1;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// A point (x, y) with 0 <= x < m, 0 <= y < n.
struct Point {
  u64 x = 0;
  u64 y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Canonical name of one subgroup: a | m, b | n, 0 <= t < gcd(a, n/b).
/// Every subgroup of the ambient group is named by exactly one triple.
struct SubgroupTriple {
  Ambient ambient;
  u64 a = 1;
  u64 b = 1;
  u64 t = 0;
  friend bool operator==(const SubgroupTriple&, const SubgroupTriple&) = default;
};

/// Triple plus derived data: the subgroup is generated by (a, 0) and (s, b)
/// with s = t * a / gcd(a, n/b); order = (m/a)(n/b), index = a*b.
struct SubgroupView {
  SubgroupTriple triple;
  u64 s = 0;
  u64 order = 1;
  u64 index = 1;
};

/// Finite-index sublattice of Z x Z with basis (a, 0), (s, b), 0 <= s < a.
struct ZZTriple {
  u64 a = 1;
  u64 b = 1;
  u64 s = 0;
  friend bool operator==(const ZZTriple&, const ZZTriple&) = default;
};

void require_valid(const Ambient& ambient);
bool triple_valid(const SubgroupTriple& triple);
void require_valid(const SubgroupTriple& triple);

/// Derives s, order and index; rejects invalid triples.
SubgroupView view_of(const SubgroupTriple& triple);

/// Lazy walk over all triples of an ambient group in lexicographic
/// (a, b, t) order, a and b ascending through the divisor lists.
class TripleStream {
 public:
  explicit TripleStream(Ambient ambient);
  std::optional<SubgroupTriple> next();

 private:
  Ambient amb_;
  std::vector<u64> da_, db_;
  std::size_t ia_ = 0, ib_ = 0;
  u64 t_ = 0;
  u64 tc_ = 0;  // gcd(a, n/b) of the current (a, b); 0 means stale
};

TripleStream enumerate_triples(Ambient ambient);
std::vector<SubgroupTriple> all_triples(Ambient ambient);

/// Lazy walk over the subgroup's elements (i*a + j*s mod m, j*b mod n),
/// row by row in j, i ascending inside a row.
class ElementStream {
 public:
  explicit ElementStream(const SubgroupView& view);
  std::optional<Point> next();

 private:
  u64 m_ = 1, n_ = 1, rows_ = 1, cols_ = 1;
  u64 astep_ = 0, sstep_ = 0, bstep_ = 0;
  u64 i_ = 0, j_ = 0, row_x_ = 0, x_ = 0, y_ = 0;
};

ElementStream elements(const SubgroupView& view);
std::vector<Point> element_list(const SubgroupView& view);

/// Membership test in O(1): b | y and a | (x - (y/b)s mod m).
bool contains(const SubgroupView& view, Point p);

/// Canonical triple of the subgroup generated by the given points.
/// Closes the generators by repeated addition while the subgroup stays
/// small, otherwise reduces the generator matrix gcd-style.
SubgroupTriple canonicalize(const Ambient& ambient, const std::vector<Point>& generators);

namespace detail {
SubgroupTriple canonicalize_closure(const Ambient& ambient, const std::vector<Point>& generators);
SubgroupTriple canonicalize_reduction(const Ambient& ambient, const std::vector<Point>& generators);
}  // namespace detail

/// Lazy walk over the sublattices of Z x Z of a fixed index:
/// a runs ascending over the divisors of the index, b = index / a,
/// s = 0 .. a-1. There are sigma(index) of them.
class ZZStream {
 public:
  explicit ZZStream(u64 index);
  std::optional<ZZTriple> next();

 private:
  u64 index_ = 1;
  std::vector<u64> divs_;
  std::size_t ia_ = 0;
  u64 s_ = 0;
};

ZZStream zz_enumerate(u64 index);

}  // namespace subgrp
