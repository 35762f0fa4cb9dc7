#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace subgrp::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// One prime-power entry of a factorization.
struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime-power decomposition.
/// Primes are strictly increasing, exponents >= 1, and the product of
/// prime^exponent over all factors equals value. factors is empty
/// exactly for value == 1.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;
};

/// Overflow-checked u64 arithmetic; throws std::overflow_error.
u64 checked_add(u64 x, u64 y);
u64 checked_mul(u64 x, u64 y);

/// (x * y) % mod without intermediate overflow; requires mod > 0.
u64 mul_mod(u64 x, u64 y, u64 mod);
u64 pow_mod(u64 base, u64 exp, u64 mod);

constexpr u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Trial division by primes up to 1e6, then Miller-Rabin plus Pollard rho
/// on whatever cofactor is left. Rejects n = 0.
Factorization factorize(u64 n);

/// All divisors of n, ascending and duplicate-free; length tau(n).
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

u64 tau(const Factorization& f);
u64 sigma(const Factorization& f);
u64 phi(const Factorization& f);
u64 psi(const Factorization& f);
int mu(const Factorization& f);
unsigned omega(const Factorization& f);

u64 tau(u64 n);
u64 sigma(u64 n);
u64 phi(u64 n);
u64 psi(u64 n);
int mu(u64 n);
unsigned omega(u64 n);

/// True iff the sum of phi(d) over d | n equals n.
bool gauss_phi_identity_check(u64 n);

}  // namespace subgrp::arith
