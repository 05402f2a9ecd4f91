#include "weber/bernoulli.hpp"

#include <cmath>

namespace weber {

ScaledBernoulli compute_bernoulli(int k, u64 j, int delta) {
  if (k < 3 || k > 12) throw domain_error("compute_bernoulli: k out of range");
  TowerLevel t = tower_level(k);
  j %= t.m;
  CycInt s(t.m);
  for (u64 a = 1; a < t.f; a += 2) {
    CharValue v = char_eval(k, j, delta, a);
    cyc_add_root(s, v.e, mpz_class(a));
  }
  if (delta == 1) {
    // folded form: pair a with f-a; chi odd makes both terms equal
    CycInt s2(t.m);
    for (u64 a = 1; a < t.f / 2; a += 2) {
      CharValue v = char_eval(k, j, delta, a);
      cyc_add_root(s2, v.e, mpz_class(2 * a) - mpz_class(t.f));
    }
    if (!cyc_eq(s, s2)) throw integrity_error("compute_bernoulli: conductor vs folded sum mismatch");
  }
  return {k, j, delta, std::move(s)};
}

mpz_class bernoulli_norm(int k, u64 j) {
  TowerLevel t = tower_level(k);
  if ((j & 1) == 0) throw domain_error("bernoulli_norm: j must be odd");
  ScaledBernoulli b = compute_bernoulli(k, j, 1);
  mpz_class ns = field_norm(b.scaled);
  if (k <= 6) {
    mpz_class nc = field_norm_conjugates(b.scaled);
    if (ns != nc) throw integrity_error("bernoulli_norm: resultant vs conjugate product mismatch");
  }
  // Nm(2^k B) = 2^(k m/2) Nm(B)
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(k) * (t.m / 2));
  if (!mpz_divisible_p(ns.get_mpz_t(), scale.get_mpz_t()))
    throw integrity_error("bernoulli_norm: scale does not divide the scaled norm");
  mpz_class q = ns / scale;
  return abs(q);
}

bool orbit_invariant(int k) {
  mpz_class ref = bernoulli_norm(k, 1);
  for (u64 j : full_order_indices(k)) {
    if (bernoulli_norm(k, j) != ref) return false;
  }
  return true;
}

mpq_class second_moment_total(int k) {
  TowerLevel t = tower_level(k);
  CycInt acc(t.m);
  for (u64 j = 0; j < t.m; j++) {
    ScaledBernoulli b = compute_bernoulli(k, j, 1);
    acc = cyc_add(acc, cyc_mul(b.scaled, cyc_conj(b.scaled)));
  }
  if (!cyc_is_constant(acc)) throw integrity_error("second_moment_total: non-rational total");
  mpz_class denom = 1;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), 2 * static_cast<mp_bitcnt_t>(k));
  mpq_class q(acc.c[0], denom);
  q.canonicalize();
  return q;
}

bool abs_square_bounded(int k, u64 j) {
  TowerLevel t = tower_level(k);
  ScaledBernoulli b = compute_bernoulli(k, j, 1);
  CycInt sq = cyc_mul(b.scaled, cyc_conj(b.scaled));
  // (2^k 2^(k-2))^2 = 2^(4k-4)
  CycInt bound(t.m);
  mpz_mul_2exp(bound.c[0].get_mpz_t(), mpz_class(1).get_mpz_t(), 4 * static_cast<mp_bitcnt_t>(k) - 4);
  return totally_nonneg(cyc_sub(bound, sq));
}

bool stickelberger_matches(int k, u64 j, int delta) {
  TowerLevel t = tower_level(k);
  // chi(theta_k) on the scaled form: sum_a a * chi(sigma_a^{-1})
  CycInt lhs(t.m);
  for (u64 a = 1; a < t.f; a += 2) {
    TwoAdicDecomp d = two_adic_decompose(a, k);
    u64 sinv = (t.m - d.s) % t.m;
    u64 e = (j % t.m) * sinv % t.m;
    if (delta & d.eps) e = (e + t.m / 2) % t.m;
    cyc_add_root(lhs, e, mpz_class(a));
  }
  ScaledBernoulli rhs = compute_bernoulli(k, (t.m - j % t.m) % t.m, delta);
  return cyc_eq(lhs, rhs.scaled);
}

BoundReport bounds_report(int k) {
  if (k < 3 || k > 16) throw domain_error("bounds_report: k out of range");
  BoundReport r;
  r.k = k;
  r.big_n = 1ull << (k - 3);
  double N = static_cast<double>(r.big_n);
  double log10_2 = std::log10(2.0);
  r.worst_log10 = static_cast<double>(k - 2) * N * log10_2;
  r.second_moment_log10 = (N / 2) * (static_cast<double>(k - 1) * log10_2 - std::log10(3.0));
  r.second_moment_weak_log10 = (N / 2) * (static_cast<double>(k) * log10_2 - std::log10(3.0));
  double f = std::pow(2.0, k);
  double base = std::sqrt(f) / M_PI * (0.5 * std::log(f) + 1.0);
  r.functional_log10 = N * std::log10(base);
  auto digits = [](double l) { return static_cast<std::size_t>(std::floor(l)) + 1; };
  r.worst_digits = digits(r.worst_log10);
  r.second_moment_digits = digits(r.second_moment_log10);
  r.functional_digits = digits(r.functional_log10);
  return r;
}

}  // namespace weber
