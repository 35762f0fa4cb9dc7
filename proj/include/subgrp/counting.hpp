#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subgrp/arith.hpp"

namespace subgrp::counting {

using arith::u64;

enum class QueryKind { total, order, cyclic, exponent, subproducts, cyclic_subproducts };

/// What to count in Z_m x Z_n. parameter carries the order k (kind order)
/// or the exponent delta (kind exponent, which needs m == n).
struct CountQuery {
  u64 m = 1;
  u64 n = 1;
  QueryKind kind = QueryKind::total;
  std::optional<u64> parameter;
};

/// Value of a query plus every formula variant that was evaluated.
/// agreed is true iff all variant values coincide; value is then that
/// common value, otherwise the default variant's value.
struct CountReport {
  CountQuery query;
  u64 value = 0;
  std::vector<std::pair<std::string, u64>> variants;
  bool agreed = true;
};

const char* to_string(QueryKind kind);

/// Number of subgroups of Z_m x Z_n. The plain entry point takes the
/// factored route; the named variants evaluate the individual closed forms.
u64 s_total(u64 m, u64 n);
u64 s_total_gcd_sum(u64 m, u64 n);   // sum of gcd(a, b) over a | m, b | n
u64 s_total_phi_tau(u64 m, u64 n);   // sum of phi(d) tau(m/d) tau(n/d) over d | gcd
u64 s_total_d_tau(u64 m, u64 n);     // sum of d tau(mn/d^2) over d | gcd
u64 s_total_factored(u64 m, u64 n);  // product of prime-power counts

/// Closed form for Z_{p^a} x Z_{p^b}, 0 <= a <= b.
u64 s_prime_power(u64 p, unsigned a, unsigned b);

/// Number of subgroups of order k; requires k | m*n.
u64 s_order(u64 m, u64 n, u64 k);
u64 s_order_gcd_sum(u64 m, u64 n, u64 k);
u64 s_order_phi_de(u64 m, u64 n, u64 k);
u64 s_order_phi_N(u64 m, u64 n, u64 k);
u64 s_order_factored(u64 m, u64 n, u64 k);

/// Closed form for subgroups of order p^c in Z_{p^a} x Z_{p^b},
/// 0 <= a <= b, 0 <= c <= a + b.
u64 s_order_prime_power(u64 p, unsigned a, unsigned b, unsigned c);

/// Number of (x, y, z, t) with xy = a, zt = b, xz = c.
u64 count_N(u64 a, u64 b, u64 c);

/// Number of cyclic subgroups of Z_m x Z_n.
u64 c_cyclic(u64 m, u64 n);
u64 c_cyclic_coprime_gcd_sum(u64 m, u64 n);  // gcd(a, b) over pairs with coprime cofactors
u64 c_cyclic_phi_gcd(u64 m, u64 n);          // sum of phi(gcd(a, b))
u64 c_cyclic_mu_phi_tau(u64 m, u64 n);       // (mu * phi)(d) tau(m/d) tau(n/d)
u64 c_cyclic_phi_d_tau(u64 m, u64 n);        // phi(d) tau(mn/d^2)
u64 c_cyclic_mu_weighted(u64 m, u64 n);      // mu(e) gcd(a, j) over aei = m, bej = n

/// Square-ambient specializations s(n) = s_total(n, n), c(n) = c_cyclic(n, n).
u64 s_single(u64 n);
u64 s_single_phi_tau_sq(u64 n);  // phi(d) tau(e)^2 over de = n
u64 s_single_d_tau_sq(u64 n);    // d tau(e^2) over de = n
u64 s_single_tau_psi(u64 n);     // tau(d) psi(e) over de = n
u64 c_single(u64 n);
u64 c_single_d_2omega(u64 n);    // d 2^omega(e) over de = n
u64 c_single_phi_tau_sq(u64 n);  // phi(d) tau(e^2) over de = n
u64 c_single_psi_sum(u64 n);     // sum of psi(d) over d | n
u64 c_single_lcm_sum(u64 n);     // gcd(d, e) over ordered pairs with lcm(d, e) = n

/// Number of subgroups of Z_n x Z_n with exponent exactly delta | n;
/// equals c_single(delta).
u64 count_exponent(u64 n, u64 delta);

/// (tau(m) tau(n), tau(m n)): all subproducts, and the cyclic ones.
std::pair<u64, u64> count_subproducts(u64 m, u64 n);
u64 cyclic_subproducts_mu_tau_tau(u64 m, u64 n);  // mu(e) tau(m/e) tau(n/e) over e | gcd

/// Runs a query. With all_variants every printed formula is evaluated and
/// compared, otherwise only the default (fast) variant.
CountReport evaluate(const CountQuery& query, bool all_variants);

}  // namespace subgrp::counting
