#include "subgrp/counting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace subgrp::counting {
namespace {

using arith::checked_add;
using arith::checked_mul;
using arith::i128;
using arith::u128;

constexpr u64 kU64Max = std::numeric_limits<u64>::max();

void require_pos(u64 m, u64 n) {
  if (m == 0 || n == 0) throw std::invalid_argument("group orders must be positive");
}

void require_order_divides(u64 m, u64 n, u64 k) {
  require_pos(m, n);
  if (k == 0 || u128(m) * n % k != 0)
    throw std::invalid_argument("subgroup order must divide m*n");
}

struct MergedPrime {
  u64 p = 0;
  unsigned em = 0;  // exponent in m
  unsigned en = 0;  // exponent in n
};

std::vector<MergedPrime> merge_primes(const arith::Factorization& fm,
                                      const arith::Factorization& fn) {
  std::vector<MergedPrime> out;
  std::size_t i = 0, j = 0;
  while (i < fm.factors.size() || j < fn.factors.size()) {
    const bool take_m = j >= fn.factors.size() ||
                        (i < fm.factors.size() && fm.factors[i].prime <= fn.factors[j].prime);
    const bool take_n = i >= fm.factors.size() ||
                        (j < fn.factors.size() && fn.factors[j].prime <= fm.factors[i].prime);
    MergedPrime mp;
    if (take_m) {
      mp.p = fm.factors[i].prime;
      mp.em = fm.factors[i].exponent;
      ++i;
    }
    if (take_n) {
      mp.p = fn.factors[j].prime;
      mp.en = fn.factors[j].exponent;
      ++j;
    }
    out.push_back(mp);
  }
  return out;
}

std::vector<MergedPrime> merge_primes(u64 m, u64 n) {
  return merge_primes(arith::factorize(m), arith::factorize(n));
}

u64 pow_u64(u64 p, unsigned e) {  // caller guarantees the result fits
  u64 r = 1;
  while (e--) r *= p;
  return r;
}

bool pow_u128(u64 p, unsigned e, u128& out) {
  u128 r = 1;
  while (e--) {
    if (p != 0 && r > ~u128(0) / p) return false;
    r *= p;
  }
  out = r;
  return true;
}

u64 phi_pp(u64 p, unsigned e) { return e == 0 ? 1 : pow_u64(p, e - 1) * (p - 1); }
u64 psi_pp(u64 p, unsigned e) {
  return e == 0 ? 1 : checked_mul(pow_u64(p, e - 1), checked_add(p, 1));
}

// odometer over exponent tuples 0 <= c[i] <= bound[i]
template <typename F>
void for_each_tuple(const std::vector<unsigned>& bound, F&& fn) {
  std::vector<unsigned> c(bound.size(), 0);
  for (;;) {
    fn(c);
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound[i]) {
      c[i] = 0;
      ++i;
    }
    if (i == c.size()) break;
    ++c[i];
  }
}

std::vector<unsigned> gcd_bounds(const std::vector<MergedPrime>& mp) {
  std::vector<unsigned> b;
  b.reserve(mp.size());
  for (const auto& q : mp) b.push_back(std::min(q.em, q.en));
  return b;
}

u64 from_signed_total(i128 acc, const char* what) {
  if (acc < 0 || acc > i128(kU64Max)) throw std::overflow_error(what);
  return u64(acc);
}

}  // namespace

const char* to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::total: return "total";
    case QueryKind::order: return "order";
    case QueryKind::cyclic: return "cyclic";
    case QueryKind::exponent: return "exponent";
    case QueryKind::subproducts: return "subproducts";
    case QueryKind::cyclic_subproducts: return "cyclic_subproducts";
  }
  return "unknown";
}

u64 s_total_gcd_sum(u64 m, u64 n) {
  require_pos(m, n);
  u64 acc = 0;
  for (u64 a : arith::divisors(m))
    for (u64 b : arith::divisors(n)) acc = checked_add(acc, std::gcd(a, b));
  return acc;
}

u64 s_total_phi_tau(u64 m, u64 n) {
  require_pos(m, n);
  const auto mp = merge_primes(m, n);
  u64 acc = 0;
  for_each_tuple(gcd_bounds(mp), [&](const std::vector<unsigned>& c) {
    u64 phi_d = 1, tau_m = 1, tau_n = 1;
    for (std::size_t i = 0; i < mp.size(); ++i) {
      phi_d *= phi_pp(mp[i].p, c[i]);
      tau_m *= mp[i].em - c[i] + 1;
      tau_n *= mp[i].en - c[i] + 1;
    }
    acc = checked_add(acc, checked_mul(phi_d, checked_mul(tau_m, tau_n)));
  });
  return acc;
}

u64 s_total_d_tau(u64 m, u64 n) {
  require_pos(m, n);
  const auto mp = merge_primes(m, n);
  u64 acc = 0;
  for_each_tuple(gcd_bounds(mp), [&](const std::vector<unsigned>& c) {
    u64 d = 1, tau_big = 1;  // tau(mn/d^2) straight off the exponents
    for (std::size_t i = 0; i < mp.size(); ++i) {
      d *= pow_u64(mp[i].p, c[i]);
      tau_big *= mp[i].em + mp[i].en - 2 * c[i] + 1;
    }
    acc = checked_add(acc, checked_mul(d, tau_big));
  });
  return acc;
}

u64 s_prime_power(u64 p, unsigned a, unsigned b) {
  if (!arith::is_prime(p)) throw std::invalid_argument("s_prime_power: p must be prime");
  if (a > b) throw std::invalid_argument("s_prime_power: needs a <= b");
  u128 pa2 = 0;
  if (pow_u128(p, a + 2, pa2) && pa2 <= (u128(1) << 120)) {
    const i128 high = i128(pa2);          // p^{a+2}
    const i128 mid = high / i128(p);      // p^{a+1}
    const i128 num = i128(b - a + 1) * high - (i128(b) - i128(a) - 1) * mid -
                     i128(a + b + 3) * i128(p) + i128(a + b + 1);
    const i128 den = i128(p - 1) * i128(p - 1);
    if (num % den != 0) throw std::logic_error("s_prime_power: inexact division");
    return from_signed_total(num / den, "subgroup count exceeds 64 bits");
  }
  // p too large for the closed form's intermediates: add up the per-order
  // counts instead, which is the same number
  u64 acc = 0;
  for (unsigned c = 0; c <= a + b; ++c) acc = checked_add(acc, s_order_prime_power(p, a, b, c));
  return acc;
}

u64 s_total_factored(u64 m, u64 n) {
  require_pos(m, n);
  u64 acc = 1;
  for (const auto& q : merge_primes(m, n))
    acc = checked_mul(acc, s_prime_power(q.p, std::min(q.em, q.en), std::max(q.em, q.en)));
  return acc;
}

u64 s_total(u64 m, u64 n) { return s_total_factored(m, n); }

u64 s_order_prime_power(u64 p, unsigned a, unsigned b, unsigned c) {
  if (!arith::is_prime(p)) throw std::invalid_argument("s_order_prime_power: p must be prime");
  if (a > b) throw std::invalid_argument("s_order_prime_power: needs a <= b");
  if (c > a + b) throw std::invalid_argument("s_order_prime_power: needs c <= a + b");
  const unsigned top = c <= a ? c : (c <= b ? a : a + b - c);
  u64 acc = 1, pk = 1;
  for (unsigned i = 1; i <= top; ++i) {
    pk = checked_mul(pk, p);
    acc = checked_add(acc, pk);
  }
  return acc;
}

u64 s_order_gcd_sum(u64 m, u64 n, u64 k) {
  require_order_divides(m, n, k);
  u64 acc = 0;
  for (u64 a : arith::divisors(m))
    for (u64 b : arith::divisors(n))
      if (u128(m) * b == u128(k) * a) acc = checked_add(acc, std::gcd(a, b));
  return acc;
}

u64 s_order_phi_de(u64 m, u64 n, u64 k) {
  require_order_divides(m, n, k);
  u64 acc = 0;
  for (u64 d : arith::divisors(std::gcd(k, m))) {
    for (u64 e : arith::divisors(std::gcd(k, n))) {
      const u128 de = u128(d) * e;
      if (de % k != 0) continue;
      acc = checked_add(acc, arith::phi(u64(de / k)));  // de/k <= gcd(d, e)
    }
  }
  return acc;
}

u64 count_N(u64 a, u64 b, u64 c) {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("count_N: arguments must be positive");
  u64 cnt = 0;
  for (u64 x : arith::divisors(std::gcd(a, c))) {
    const u64 z = c / x;
    if (b % z == 0) ++cnt;
  }
  return cnt;
}

u64 s_order_phi_N(u64 m, u64 n, u64 k) {
  require_order_divides(m, n, k);
  u64 acc = 0;
  for (u64 d : arith::divisors(std::gcd(std::gcd(m, n), k)))
    acc = checked_add(acc, checked_mul(arith::phi(d), count_N(m / d, n / d, k / d)));
  return acc;
}

u64 s_order_factored(u64 m, u64 n, u64 k) {
  require_order_divides(m, n, k);
  const auto mp = merge_primes(m, n);
  const auto fk = arith::factorize(k);
  u64 acc = 1;
  std::size_t ki = 0;
  for (const auto& q : mp) {
    unsigned c = 0;
    if (ki < fk.factors.size() && fk.factors[ki].prime == q.p) {
      c = fk.factors[ki].exponent;
      ++ki;
    }
    acc = checked_mul(acc, s_order_prime_power(q.p, std::min(q.em, q.en), std::max(q.em, q.en), c));
  }
  if (ki != fk.factors.size())
    throw std::invalid_argument("subgroup order must divide m*n");
  return acc;
}

u64 s_order(u64 m, u64 n, u64 k) {
  require_order_divides(m, n, k);
  if (k == 1 || u128(m) * n == k) return 1;  // the trivial and the full subgroup
  return s_order_factored(m, n, k);
}

u64 c_cyclic_coprime_gcd_sum(u64 m, u64 n) {
  require_pos(m, n);
  u64 acc = 0;
  for (u64 a : arith::divisors(m))
    for (u64 b : arith::divisors(n))
      if (std::gcd(m / a, n / b) == 1) acc = checked_add(acc, std::gcd(a, b));
  return acc;
}

u64 c_cyclic_phi_gcd(u64 m, u64 n) {
  require_pos(m, n);
  u64 acc = 0;
  for (u64 a : arith::divisors(m))
    for (u64 b : arith::divisors(n)) acc = checked_add(acc, arith::phi(std::gcd(a, b)));
  return acc;
}

u64 c_cyclic_mu_phi_tau(u64 m, u64 n) {
  require_pos(m, n);
  const auto mp = merge_primes(m, n);
  u64 acc = 0;
  for_each_tuple(gcd_bounds(mp), [&](const std::vector<unsigned>& c) {
    u64 conv = 1, tau_m = 1, tau_n = 1;  // conv = (mu * phi)(d), prime by prime
    for (std::size_t i = 0; i < mp.size(); ++i) {
      const u64 p = mp[i].p;
      if (c[i] == 1) conv *= p - 2;
      else if (c[i] >= 2) conv *= checked_mul(pow_u64(p, c[i] - 2), (p - 1) * (p - 1));
      tau_m *= mp[i].em - c[i] + 1;
      tau_n *= mp[i].en - c[i] + 1;
    }
    acc = checked_add(acc, checked_mul(conv, checked_mul(tau_m, tau_n)));
  });
  return acc;
}

u64 c_cyclic_phi_d_tau(u64 m, u64 n) {
  require_pos(m, n);
  const auto mp = merge_primes(m, n);
  u64 acc = 0;
  for_each_tuple(gcd_bounds(mp), [&](const std::vector<unsigned>& c) {
    u64 phi_d = 1, tau_big = 1;
    for (std::size_t i = 0; i < mp.size(); ++i) {
      phi_d *= phi_pp(mp[i].p, c[i]);
      tau_big *= mp[i].em + mp[i].en - 2 * c[i] + 1;
    }
    acc = checked_add(acc, checked_mul(phi_d, tau_big));
  });
  return acc;
}

u64 c_cyclic_mu_weighted(u64 m, u64 n) {
  require_pos(m, n);
  i128 acc = 0;
  for (u64 e : arith::divisors(std::gcd(m, n))) {
    const int mu_e = arith::mu(e);
    if (mu_e == 0) continue;
    i128 inner = 0;
    for (u64 a : arith::divisors(m / e))
      for (u64 j : arith::divisors(n / e)) inner += std::gcd(a, j);
    acc += i128(mu_e) * inner;
  }
  return from_signed_total(acc, "cyclic count exceeds 64 bits");
}

u64 c_cyclic(u64 m, u64 n) { return c_cyclic_phi_d_tau(m, n); }

u64 s_single_phi_tau_sq(u64 n) {
  require_pos(n, 1);
  const auto f = arith::factorize(n);
  std::vector<unsigned> bound;
  for (const auto& q : f.factors) bound.push_back(q.exponent);
  u64 acc = 0;
  for_each_tuple(bound, [&](const std::vector<unsigned>& c) {
    u64 phi_d = 1, tau_e = 1;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      phi_d *= phi_pp(f.factors[i].prime, c[i]);
      tau_e *= f.factors[i].exponent - c[i] + 1;
    }
    acc = checked_add(acc, checked_mul(phi_d, checked_mul(tau_e, tau_e)));
  });
  return acc;
}

u64 s_single_d_tau_sq(u64 n) {
  require_pos(n, 1);
  const auto f = arith::factorize(n);
  std::vector<unsigned> bound;
  for (const auto& q : f.factors) bound.push_back(q.exponent);
  u64 acc = 0;
  for_each_tuple(bound, [&](const std::vector<unsigned>& c) {
    u64 d = 1, tau_sq = 1;  // tau(e^2) with e = n/d
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      d *= pow_u64(f.factors[i].prime, c[i]);
      tau_sq *= 2 * (f.factors[i].exponent - c[i]) + 1;
    }
    acc = checked_add(acc, checked_mul(d, tau_sq));
  });
  return acc;
}

u64 s_single_tau_psi(u64 n) {
  require_pos(n, 1);
  const auto f = arith::factorize(n);
  std::vector<unsigned> bound;
  for (const auto& q : f.factors) bound.push_back(q.exponent);
  u64 acc = 0;
  for_each_tuple(bound, [&](const std::vector<unsigned>& c) {
    u64 tau_d = 1, psi_e = 1;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      tau_d *= c[i] + 1;
      psi_e = checked_mul(psi_e, psi_pp(f.factors[i].prime, f.factors[i].exponent - c[i]));
    }
    acc = checked_add(acc, checked_mul(tau_d, psi_e));
  });
  return acc;
}

u64 s_single(u64 n) { return s_single_d_tau_sq(n); }

u64 c_single_d_2omega(u64 n) {
  require_pos(n, 1);
  const auto f = arith::factorize(n);
  std::vector<unsigned> bound;
  for (const auto& q : f.factors) bound.push_back(q.exponent);
  u64 acc = 0;
  for_each_tuple(bound, [&](const std::vector<unsigned>& c) {
    u64 d = 1;
    unsigned om = 0;  // omega(n/d)
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      d *= pow_u64(f.factors[i].prime, c[i]);
      if (c[i] < f.factors[i].exponent) ++om;
    }
    acc = checked_add(acc, checked_mul(d, u64(1) << om));
  });
  return acc;
}

u64 c_single_phi_tau_sq(u64 n) {
  require_pos(n, 1);
  const auto f = arith::factorize(n);
  std::vector<unsigned> bound;
  for (const auto& q : f.factors) bound.push_back(q.exponent);
  u64 acc = 0;
  for_each_tuple(bound, [&](const std::vector<unsigned>& c) {
    u64 phi_d = 1, tau_sq = 1;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      phi_d *= phi_pp(f.factors[i].prime, c[i]);
      tau_sq *= 2 * (f.factors[i].exponent - c[i]) + 1;
    }
    acc = checked_add(acc, checked_mul(phi_d, tau_sq));
  });
  return acc;
}

u64 c_single_psi_sum(u64 n) {
  require_pos(n, 1);
  u64 acc = 0;
  for (u64 d : arith::divisors(n)) acc = checked_add(acc, arith::psi(d));
  return acc;
}

u64 c_single_lcm_sum(u64 n) {
  require_pos(n, 1);
  const auto divs = arith::divisors(n);
  u64 acc = 0;
  for (u64 d : divs) {
    for (u64 e : divs) {
      const u64 g = std::gcd(d, e);
      if (u128(d / g) * e == n) acc = checked_add(acc, g);
    }
  }
  return acc;
}

u64 c_single(u64 n) { return c_single_d_2omega(n); }

u64 count_exponent(u64 n, u64 delta) {
  require_pos(n, 1);
  if (delta == 0 || n % delta != 0)
    throw std::invalid_argument("exponent must divide the ambient order");
  return c_single(delta);
}

std::pair<u64, u64> count_subproducts(u64 m, u64 n) {
  require_pos(m, n);
  const auto fm = arith::factorize(m), fn = arith::factorize(n);
  const u64 total = checked_mul(arith::tau(fm), arith::tau(fn));
  u64 cyc = 1;  // tau(m*n) straight off the merged exponents
  for (const auto& q : merge_primes(fm, fn)) cyc = checked_mul(cyc, u64(q.em) + q.en + 1);
  return {total, cyc};
}

u64 cyclic_subproducts_mu_tau_tau(u64 m, u64 n) {
  require_pos(m, n);
  const auto mp = merge_primes(m, n);
  std::vector<std::size_t> common;  // primes dividing gcd(m, n)
  for (std::size_t i = 0; i < mp.size(); ++i)
    if (mp[i].em > 0 && mp[i].en > 0) common.push_back(i);
  if (common.size() > 30) throw std::overflow_error("too many common primes for the mu sum");
  i128 acc = 0;
  for (std::size_t mask = 0; mask < (std::size_t(1) << common.size()); ++mask) {
    // e = product of the selected primes, squarefree, so mu(e) = (-1)^popcount
    u64 tau_m = 1, tau_n = 1;
    for (std::size_t i = 0; i < mp.size(); ++i) {
      unsigned drop = 0;
      for (std::size_t ci = 0; ci < common.size(); ++ci)
        if (common[ci] == i && (mask >> ci & 1)) drop = 1;
      tau_m *= mp[i].em - drop + 1;
      tau_n *= mp[i].en - drop + 1;
    }
    const int sign = __builtin_popcountll(mask) % 2 == 0 ? 1 : -1;
    acc += i128(sign) * i128(tau_m) * i128(tau_n);
  }
  return from_signed_total(acc, "subproduct count exceeds 64 bits");
}

namespace {

const char* default_variant(QueryKind kind) {
  switch (kind) {
    case QueryKind::total:
    case QueryKind::order: return "factored";
    case QueryKind::cyclic: return "phi_d_tau";
    case QueryKind::exponent: return "d_2omega";
    case QueryKind::subproducts: return "tau_tau";
    case QueryKind::cyclic_subproducts: return "tau_mn";
  }
  return "";
}

}  // namespace

CountReport evaluate(const CountQuery& q, bool all_variants) {
  require_pos(q.m, q.n);
  CountReport rep;
  rep.query = q;
  auto add = [&rep](const char* name, u64 v) { rep.variants.emplace_back(name, v); };
  switch (q.kind) {
    case QueryKind::total:
      if (all_variants) {
        add("gcd_sum", s_total_gcd_sum(q.m, q.n));
        add("phi_tau", s_total_phi_tau(q.m, q.n));
        add("d_tau", s_total_d_tau(q.m, q.n));
        add("factored", s_total_factored(q.m, q.n));
      } else {
        add("factored", s_total(q.m, q.n));
      }
      break;
    case QueryKind::order: {
      if (!q.parameter) throw std::invalid_argument("order queries need a parameter");
      const u64 k = *q.parameter;
      if (all_variants) {
        add("gcd_sum", s_order_gcd_sum(q.m, q.n, k));
        add("phi_de", s_order_phi_de(q.m, q.n, k));
        add("phi_N", s_order_phi_N(q.m, q.n, k));
        add("factored", s_order_factored(q.m, q.n, k));
      } else {
        add("factored", s_order(q.m, q.n, k));
      }
      break;
    }
    case QueryKind::cyclic:
      if (all_variants) {
        add("coprime_gcd_sum", c_cyclic_coprime_gcd_sum(q.m, q.n));
        add("phi_gcd", c_cyclic_phi_gcd(q.m, q.n));
        add("mu_phi_tau", c_cyclic_mu_phi_tau(q.m, q.n));
        add("phi_d_tau", c_cyclic_phi_d_tau(q.m, q.n));
        add("mu_weighted", c_cyclic_mu_weighted(q.m, q.n));
      } else {
        add("phi_d_tau", c_cyclic(q.m, q.n));
      }
      break;
    case QueryKind::exponent: {
      if (q.m != q.n) throw std::invalid_argument("exponent queries need m = n");
      if (!q.parameter) throw std::invalid_argument("exponent queries need a parameter");
      const u64 delta = *q.parameter;
      if (delta == 0 || q.n % delta != 0)
        throw std::invalid_argument("exponent must divide the ambient order");
      if (all_variants) {
        add("d_2omega", c_single_d_2omega(delta));
        add("phi_tau_sq", c_single_phi_tau_sq(delta));
        add("psi_sum", c_single_psi_sum(delta));
        add("lcm_sum", c_single_lcm_sum(delta));
      } else {
        add("d_2omega", count_exponent(q.n, delta));
      }
      break;
    }
    case QueryKind::subproducts:
      add("tau_tau", count_subproducts(q.m, q.n).first);
      break;
    case QueryKind::cyclic_subproducts:
      add("tau_mn", count_subproducts(q.m, q.n).second);
      if (all_variants) add("mu_tau_tau", cyclic_subproducts_mu_tau_tau(q.m, q.n));
      break;
  }
  rep.value = rep.variants.front().second;
  for (const auto& v : rep.variants)
    if (v.first == default_variant(q.kind)) rep.value = v.second;
  rep.agreed = std::all_of(rep.variants.begin(), rep.variants.end(),
                           [&](const auto& v) { return v.second == rep.value; });
  return rep;
}

}  // namespace subgrp::counting
