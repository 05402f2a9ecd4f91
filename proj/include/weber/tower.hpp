#pragma once
// Structure of the 2-power real cyclotomic tower levels: the group
// (Z/2^k)* = <-1> x <5>, its characters, Galois group ring idempotents
// over F_ell, and analytic constants (discriminant, Minkowski bound).
//
// Conventions, fixed throughout:
//   level k: field K_k^+ = Q(zeta_{2^k} + zeta_{2^k}^{-1}), degree n = 2^{k-2}
//   conductor f = 2^k, character value group mu_m with m = n
//   odd a (mod 2^k) decomposes uniquely as a = (-1)^eps * 5^s, s in [0, n)
//   chi_{j,delta}(a) = zeta_m^{j*s + (m/2)*delta*eps}; psi_j := chi_{j,1}

#include <cstddef>
#include <vector>

#include "weber/common.hpp"

namespace weber {

struct TowerLevel {
  int k;   // tower index, 3 <= k <= 12 for full pipelines
  u64 n;   // field degree 2^(k-2)
  u64 f;   // conductor 2^k
  u64 m;   // character order bound, equals n
};

TowerLevel tower_level(int k);

struct TwoAdicDecomp {
  int eps;  // 0 or 1
  u64 s;    // in [0, 2^(k-2))
};

// a odd, 0 < a < 2^k. Bitwise-lifted discrete log base 5; table-backed
// for k <= 16 and cross-checked against the lift.
TwoAdicDecomp two_adic_decompose(u64 a, int k);

// Character value as an exponent of zeta_m, or the zero marker for
// even arguments (chi vanishes off (Z/2^k)*).
struct CharValue {
  bool zero;
  u64 e;  // exponent mod m, meaningful iff !zero
};

CharValue char_eval(int k, u64 j, int delta, u64 a);

// Multiplicative order of chi_{j,delta} in the dual group.
u64 char_order(int k, u64 j, int delta);

// Conductor of chi_{j,delta} as a power of two (1, 4, 8, ..., 2^k).
u64 char_conductor(int k, u64 j, int delta);

// Indices j of the full-order odd primitive characters psi_j (j odd).
std::vector<u64> full_order_indices(int k);

// --- group ring F_ell[Gal(K_k^+/Q)] = F_ell[x]/(x^n - 1) ------------
// Index i of the coefficient vector corresponds to sigma^i where
// sigma = sigma_5 generates the (cyclic) Galois group.

struct GroupRingElt {
  u64 ell;
  std::vector<u64> c;  // length n, entries mod ell
};

GroupRingElt gr_add(const GroupRingElt& a, const GroupRingElt& b);
GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b);
bool gr_eq(const GroupRingElt& a, const GroupRingElt& b);
GroupRingElt gr_one(u64 n, u64 ell);
GroupRingElt gr_zero(u64 n, u64 ell);

// Smallest primitive n-th root of unity mod ell; ell prime,
// ell = 1 (mod n) required (else domain_error "unsupported embedding").
u64 primitive_root_of_unity(u64 n, u64 ell);

// Orthogonal idempotent e_{chi_j} = n^{-1} sum_i chi_j(sigma^i)^{-1} sigma^i.
GroupRingElt idempotent(u64 j, u64 n, u64 ell);

// Action of the relative norm element N = 1 + sigma^(n/2) on e_{chi_j}:
// returns the scalar by which N acts (2 if ord(chi_j) | n/2, else 0).
u64 norm_element_action(u64 j, u64 n, u64 ell);

// log2 of |disc K_k^+| = (k-1)*2^(k-2) - 1.
u64 discriminant_log2(int k);

// log10 of the Minkowski bound (N!/N^N)*sqrt(|d|), totally real field.
double minkowski_bound_log10(int k);

}  // namespace weber
