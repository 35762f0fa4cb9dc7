#include "subgrp/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace subgrp {
namespace {

using arith::i128;
using arith::u128;

constexpr u128 kClosureGridLimit = 1u << 20;  // bytes of closure bitmap we tolerate
constexpr std::size_t kClosureSizeCap = 10'000;

void require_points_in_range(const Ambient& amb, const std::vector<Point>& pts) {
  for (const Point& p : pts) {
    if (p.x >= amb.m || p.y >= amb.n)
      throw std::invalid_argument("canonicalize: point outside the ambient group");
  }
}

// g = gcd(a, b) together with u, v such that u*a + v*b == g
std::tuple<u64, i128, i128> ext_gcd(u64 a, u64 b) {
  i128 old_r = a, r = b;
  i128 old_u = 1, u = 0;
  i128 old_v = 0, v = 1;
  while (r != 0) {
    const i128 q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_u, u) = std::make_tuple(u, old_u - q * u);
    std::tie(old_v, v) = std::make_tuple(v, old_v - q * v);
  }
  return {u64(old_r), old_u, old_v};
}

u64 mod_reduce(i128 v, u64 m) {
  i128 r = v % i128(m);
  if (r < 0) r += m;
  return u64(r);
}

// canonical triple from a closed element set given as a membership grid
SubgroupTriple triple_from_closed_set(const Ambient& amb, const std::vector<char>& in,
                                      const std::vector<Point>& members) {
  const u64 m = amb.m, n = amb.n;
  u64 b = n, a = m;
  for (const Point& p : members) {
    b = std::gcd(b, p.y);
    if (p.y == 0) a = std::gcd(a, p.x);
  }
  u64 s = 0;
  if (b < n) {
    const std::size_t row = std::size_t(b) * m;
    for (u64 x = 0; x < m; ++x) {
      if (in[row + x]) {
        s = x;
        break;
      }
    }
  }
  const u64 g = std::gcd(a, n / b);
  if (s % (a / g) != 0 || s >= a)
    throw std::logic_error("canonicalize: closed set is not a subgroup");
  return SubgroupTriple{amb, a, b, s / (a / g)};
}

std::optional<SubgroupTriple> closure_with_cap(const Ambient& amb,
                                               const std::vector<Point>& gens,
                                               std::size_t cap) {
  const u64 m = amb.m, n = amb.n;
  std::vector<char> in(std::size_t(m) * std::size_t(n), 0);
  std::vector<Point> members;
  members.push_back({0, 0});
  in[0] = 1;
  std::size_t head = 0;
  while (head < members.size()) {
    const Point base = members[head++];
    for (const Point& g : gens) {
      u64 nx = base.x + g.x;
      if (nx >= m) nx -= m;
      u64 ny = base.y + g.y;
      if (ny >= n) ny -= n;
      const std::size_t idx = std::size_t(ny) * m + nx;
      if (!in[idx]) {
        if (members.size() >= cap) return std::nullopt;
        in[idx] = 1;
        members.push_back({nx, ny});
      }
    }
  }
  return triple_from_closed_set(amb, in, members);
}

}  // namespace

void require_valid(const Ambient& amb) {
  if (amb.m == 0 || amb.n == 0)
    throw std::invalid_argument("ambient orders must be positive");
}

bool triple_valid(const SubgroupTriple& tr) {
  if (tr.ambient.m == 0 || tr.ambient.n == 0) return false;
  if (tr.a == 0 || tr.b == 0) return false;
  if (tr.ambient.m % tr.a != 0 || tr.ambient.n % tr.b != 0) return false;
  return tr.t < std::gcd(tr.a, tr.ambient.n / tr.b);
}

void require_valid(const SubgroupTriple& tr) {
  if (!triple_valid(tr)) throw std::invalid_argument("triple outside the index set of (m, n)");
}

SubgroupView view_of(const SubgroupTriple& tr) {
  require_valid(tr);
  const u64 g = std::gcd(tr.a, tr.ambient.n / tr.b);
  SubgroupView v;
  v.triple = tr;
  v.s = tr.t * (tr.a / g);
  v.order = arith::checked_mul(tr.ambient.m / tr.a, tr.ambient.n / tr.b);
  v.index = arith::checked_mul(tr.a, tr.b);
  return v;
}

TripleStream::TripleStream(Ambient ambient) : amb_(ambient) {
  require_valid(amb_);
  da_ = arith::divisors(amb_.m);
  db_ = arith::divisors(amb_.n);
}

std::optional<SubgroupTriple> TripleStream::next() {
  if (ia_ >= da_.size()) return std::nullopt;
  if (tc_ == 0) tc_ = std::gcd(da_[ia_], amb_.n / db_[ib_]);
  SubgroupTriple out{amb_, da_[ia_], db_[ib_], t_};
  if (++t_ >= tc_) {
    t_ = 0;
    tc_ = 0;
    if (++ib_ >= db_.size()) {
      ib_ = 0;
      ++ia_;
    }
  }
  return out;
}

TripleStream enumerate_triples(Ambient ambient) { return TripleStream(ambient); }

std::vector<SubgroupTriple> all_triples(Ambient ambient) {
  std::vector<SubgroupTriple> out;
  TripleStream st(ambient);
  while (auto tr = st.next()) out.push_back(*tr);
  return out;
}

ElementStream::ElementStream(const SubgroupView& view) {
  const SubgroupTriple& tr = view.triple;
  require_valid(tr);
  const u64 g = std::gcd(tr.a, tr.ambient.n / tr.b);
  if (view.s != tr.t * (tr.a / g))
    throw std::invalid_argument("view inconsistent with its triple");
  m_ = tr.ambient.m;
  n_ = tr.ambient.n;
  cols_ = m_ / tr.a;
  rows_ = n_ / tr.b;
  astep_ = tr.a % m_;
  sstep_ = view.s % m_;
  bstep_ = tr.b % n_;
}

std::optional<Point> ElementStream::next() {
  if (j_ >= rows_) return std::nullopt;
  const Point out{x_, y_};
  if (++i_ >= cols_) {
    i_ = 0;
    ++j_;
    row_x_ += sstep_;
    if (row_x_ >= m_) row_x_ -= m_;
    x_ = row_x_;
    y_ += bstep_;
    if (y_ >= n_) y_ -= n_;
  } else {
    x_ += astep_;
    if (x_ >= m_) x_ -= m_;
  }
  return out;
}

ElementStream elements(const SubgroupView& view) { return ElementStream(view); }

std::vector<Point> element_list(const SubgroupView& view) {
  std::vector<Point> out;
  ElementStream st(view);
  while (auto p = st.next()) out.push_back(*p);
  return out;
}

bool contains(const SubgroupView& view, Point p) {
  const SubgroupTriple& tr = view.triple;
  const u64 m = tr.ambient.m, n = tr.ambient.n;
  const u64 x = p.x % m, y = p.y % n;
  if (y % tr.b != 0) return false;
  const u64 off = arith::mul_mod(y / tr.b, view.s, m);
  const u64 rel = (x + m - off) % m;
  return rel % tr.a == 0;
}

namespace detail {

SubgroupTriple canonicalize_closure(const Ambient& amb, const std::vector<Point>& gens) {
  require_valid(amb);
  if (gens.empty()) throw std::invalid_argument("canonicalize: no generators");
  require_points_in_range(amb, gens);
  if (u128(amb.m) * amb.n > kClosureGridLimit)
    throw std::invalid_argument("canonicalize_closure: ambient too large for the closure grid");
  auto tr = closure_with_cap(amb, gens, std::size_t(-1));
  return *tr;
}

SubgroupTriple canonicalize_reduction(const Ambient& amb, const std::vector<Point>& gens) {
  require_valid(amb);
  if (gens.empty()) throw std::invalid_argument("canonicalize: no generators");
  require_points_in_range(amb, gens);
  const u64 m = amb.m, n = amb.n;
  // row-reduce the generator matrix over Z, seeded with (m, 0) and (0, n):
  // axis accumulates the x-axis intersection, (scur, bcur) the off-axis row
  u64 axis = m;
  u64 scur = 0, bcur = n;
  for (const Point& p : gens) {
    if (p.y == 0) {
      axis = std::gcd(axis, p.x);
      continue;
    }
    const auto [g, u, w] = ext_gcd(bcur, p.y);
    const u64 left = arith::mul_mod(bcur / g, p.x, m);
    const u64 right = arith::mul_mod(p.y / g, scur, m);
    const u64 leftover_x = (left + m - right) % m;
    const u64 new_s =
        (arith::mul_mod(mod_reduce(u, m), scur, m) + arith::mul_mod(mod_reduce(w, m), p.x, m)) % m;
    axis = std::gcd(axis, leftover_x);
    bcur = g;
    scur = new_s;
  }
  // wrap-around row: (n/b) * (s, b) lands back on the x-axis
  axis = std::gcd(axis, arith::mul_mod(n / bcur, scur, m));
  const u64 a = axis, b = bcur;
  const u64 s = scur % a;
  const u64 g2 = std::gcd(a, n / b);
  if (s % (a / g2) != 0) throw std::logic_error("canonicalize: reduction produced a bad offset");
  return SubgroupTriple{amb, a, b, s / (a / g2)};
}

}  // namespace detail

SubgroupTriple canonicalize(const Ambient& amb, const std::vector<Point>& gens) {
  require_valid(amb);
  if (gens.empty()) throw std::invalid_argument("canonicalize: no generators");
  require_points_in_range(amb, gens);
  if (u128(amb.m) * amb.n <= kClosureGridLimit) {
    if (auto tr = closure_with_cap(amb, gens, kClosureSizeCap)) return *tr;
  }
  return detail::canonicalize_reduction(amb, gens);
}

ZZStream::ZZStream(u64 index) : index_(index) {
  if (index == 0) throw std::invalid_argument("lattice index must be positive");
  divs_ = arith::divisors(index);
}

std::optional<ZZTriple> ZZStream::next() {
  if (ia_ >= divs_.size()) return std::nullopt;
  const u64 a = divs_[ia_];
  ZZTriple out{a, index_ / a, s_};
  if (++s_ >= a) {
    s_ = 0;
    ++ia_;
  }
  return out;
}

ZZStream zz_enumerate(u64 index) { return ZZStream(index); }

}  // namespace subgrp
