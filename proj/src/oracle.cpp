#include "subgrp/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace subgrp::oracle {
namespace {

using arith::u128;

Point add_point(Point p, Point q, const Ambient& amb) {
  u64 x = p.x + q.x;
  if (x >= amb.m) x -= amb.m;
  u64 y = p.y + q.y;
  if (y >= amb.n) y -= amb.n;
  return {x, y};
}

}  // namespace

std::vector<RawSubgroup> all_subgroups(const Ambient& amb, u64 limit) {
  require_valid(amb);
  if (u128(amb.m) * amb.n > limit)
    throw std::invalid_argument("oracle: ambient larger than the configured limit");
  const u64 m = amb.m, n = amb.n;
  const std::size_t total = std::size_t(m * n);
  const std::size_t words = (total + 63) / 64;
  auto index_of = [m](Point p) { return std::size_t(p.y * m + p.x); };

  // cyclic part of every element; every subgroup here is generated by at
  // most two elements, so closing <g> + <h> over all pairs finds them all
  std::vector<std::pair<std::vector<u64>, std::vector<Point>>> cyclic;
  for (u64 y = 0; y < n; ++y) {
    for (u64 x = 0; x < m; ++x) {
      const Point g{x, y};
      std::vector<u64> mask(words, 0);
      std::vector<Point> elems;
      Point h{0, 0};
      do {
        const std::size_t idx = index_of(h);
        mask[idx >> 6] |= u64(1) << (idx & 63);
        elems.push_back(h);
        h = add_point(h, g, amb);
      } while (h.x != 0 || h.y != 0);
      cyclic.emplace_back(std::move(mask), std::move(elems));
    }
  }
  std::sort(cyclic.begin(), cyclic.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
  cyclic.erase(std::unique(cyclic.begin(), cyclic.end(),
                           [](const auto& lhs, const auto& rhs) { return lhs.first == rhs.first; }),
               cyclic.end());

  std::vector<std::vector<u64>> masks;
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    for (std::size_t j = i; j < cyclic.size(); ++j) {
      std::vector<u64> mask(words, 0);
      for (const Point& p : cyclic[i].second) {
        for (const Point& q : cyclic[j].second) {
          const std::size_t idx = index_of(add_point(p, q, amb));
          mask[idx >> 6] |= u64(1) << (idx & 63);
        }
      }
      masks.push_back(std::move(mask));
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  std::vector<RawSubgroup> out;
  out.reserve(masks.size());
  for (const auto& mask : masks) {
    RawSubgroup sub;
    sub.ambient = amb;
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (mask[idx >> 6] >> (idx & 63) & 1) sub.elements.push_back({idx % m, u64(idx) / m});
    }
    std::sort(sub.elements.begin(), sub.elements.end());
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const RawSubgroup& lhs, const RawSubgroup& rhs) {
    if (lhs.elements.size() != rhs.elements.size())
      return lhs.elements.size() < rhs.elements.size();
    return lhs.elements < rhs.elements;
  });
  return out;
}

u64 direct_order(Point g, const Ambient& amb) {
  require_valid(amb);
  u64 ord = 1;
  Point h = g;
  while (h.x != 0 || h.y != 0) {
    h = add_point(h, g, amb);
    ++ord;
  }
  return ord;
}

u64 direct_exponent(const RawSubgroup& sub) {
  u64 e = 1;
  for (const Point& p : sub.elements) e = std::lcm(e, direct_order(p, sub.ambient));
  return e;
}

bool direct_is_cyclic(const RawSubgroup& sub) {
  for (const Point& p : sub.elements)
    if (direct_order(p, sub.ambient) == sub.elements.size()) return true;
  return false;
}

}  // namespace subgrp::oracle
