#include "subgrp/arith.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace subgrp::arith {
namespace {

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (u64 j = u64(i) * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return ps;
  }();
  return primes;
}

// Brent's variant of Pollard rho. Caller guarantees n is composite and has
// no prime factor below the trial-division limit.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  u64 seed = n ^ 0x9e3779b97f4a7c15ULL;  // fixed per n, keeps runs reproducible
  auto next = [&seed] {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  for (;;) {
    const u64 c = next() % (n - 1) + 1;
    u64 y = next() % n;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    const u64 batch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = (mul_mod(y, y, n) + c) % n;
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      y = ys;
      while (g == 1) {
        y = (mul_mod(y, y, n) + c) % n;
        g = std::gcd(x > y ? x - y : y - x, n);
      }
    }
    if (g != n) return g;
  }
}

}  // namespace

u64 checked_add(u64 x, u64 y) {
  u64 r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("u64 addition overflow");
  return r;
}

u64 checked_mul(u64 x, u64 y) {
  u64 r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("u64 multiplication overflow");
  return r;
}

u64 mul_mod(u64 x, u64 y, u64 mod) { return u64(u128(x) * y % mod); }

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  u64 r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == u64(p);
  }
  u64 d = n - 1;
  const int r = std::countr_zero(d);
  d >>= r;
  // this base set decides primality exactly for all n < 3.3e24
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: argument must be positive");
  Factorization out;
  out.value = n;
  if (n == 1) return out;
  for (std::uint32_t p : small_primes()) {
    if (u128(p) * p > n) break;
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (n > 1) {
    // cofactor has no prime divisor below the trial limit
    std::vector<u64> pending{n};
    std::vector<u64> primes;
    while (!pending.empty()) {
      const u64 v = pending.back();
      pending.pop_back();
      if (is_prime(v)) {
        primes.push_back(v);
        continue;
      }
      const u64 d = pollard_rho(v);
      pending.push_back(d);
      pending.push_back(v / d);
    }
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
      std::size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      out.factors.push_back({primes[i], unsigned(j - i)});
      i = j;
    }
  }
  return out;
}

std::vector<u64> divisors(const Factorization& f) {
  const std::size_t r = f.factors.size();
  std::vector<unsigned> exps(r, 0);
  std::vector<u64> pw(r, 1);
  std::vector<u64> divs;
  u64 d = 1;
  // mixed-radix counter over the exponent vector
  for (;;) {
    divs.push_back(d);
    std::size_t i = 0;
    while (i < r && exps[i] == f.factors[i].exponent) {
      d /= pw[i];
      pw[i] = 1;
      exps[i] = 0;
      ++i;
    }
    if (i == r) break;
    ++exps[i];
    pw[i] *= f.factors[i].prime;
    d *= f.factors[i].prime;
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

u64 tau(const Factorization& f) {
  u64 acc = 1;
  for (const auto& [p, e] : f.factors) acc *= e + 1;
  return acc;
}

u64 sigma(const Factorization& f) {
  u64 acc = 1;
  for (const auto& [p, e] : f.factors) {
    u64 term = 1, pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk = checked_mul(pk, p);
      term = checked_add(term, pk);
    }
    acc = checked_mul(acc, term);
  }
  return acc;
}

u64 phi(const Factorization& f) {
  u64 acc = 1;
  for (const auto& [p, e] : f.factors) {
    u64 term = p - 1;
    for (unsigned i = 1; i < e; ++i) term *= p;  // bounded by value
    acc *= term;
  }
  return acc;
}

u64 psi(const Factorization& f) {
  u64 acc = 1;
  for (const auto& [p, e] : f.factors) {
    u64 term = checked_add(p, 1);
    for (unsigned i = 1; i < e; ++i) term = checked_mul(term, p);
    acc = checked_mul(acc, term);
  }
  return acc;
}

int mu(const Factorization& f) {
  for (const auto& [p, e] : f.factors)
    if (e > 1) return 0;
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

unsigned omega(const Factorization& f) { return unsigned(f.factors.size()); }

u64 tau(u64 n) { return tau(factorize(n)); }
u64 sigma(u64 n) { return sigma(factorize(n)); }
u64 phi(u64 n) { return phi(factorize(n)); }
u64 psi(u64 n) { return psi(factorize(n)); }
int mu(u64 n) { return mu(factorize(n)); }
unsigned omega(u64 n) { return omega(factorize(n)); }

bool gauss_phi_identity_check(u64 n) {
  u64 acc = 0;
  for (u64 d : divisors(n)) acc += phi(d);  // partial sums stay <= n
  return acc == n;
}

}  // namespace subgrp::arith
