#pragma once
// Generalized Bernoulli numbers B_{1,chi} for characters mod 2^k,
// their field norms, moment identities, the Stickelberger pairing, and
// the analytic size bounds used to sanity-check norm magnitudes.
//
// Everything is computed on the integral scaled form
//   S(chi) = 2^k * B_{1,chi} = sum_{a odd, 0<a<2^k} chi(a) a  in Z[zeta_m].

#include <gmpxx.h>

#include "weber/cyclotomic.hpp"
#include "weber/tower.hpp"

namespace weber {

struct ScaledBernoulli {
  int k;
  u64 j;
  int delta;
  CycInt scaled;  // 2^k B_{1,chi_{j,delta}}
};

// Conductor sum, cross-checked against the folded form
// sum_{a odd, a<2^(k-1)} chi(a)(2a - 2^k) when chi is odd.
ScaledBernoulli compute_bernoulli(int k, u64 j, int delta = 1);

// |Nm(S(psi_j))| / 2^(k m/2) for odd j; exact, with divisibility and
// (for k <= 6) conjugate-product cross-checks.
mpz_class bernoulli_norm(int k, u64 j = 1);

// true iff bernoulli_norm agrees across the full Galois orbit of psi_1
bool orbit_invariant(int k);

// sum over the m odd characters chi_{j,1} of |B_{1,chi}|^2, exact
mpq_class second_moment_total(int k);

// exact check that 2^(2k) |B_{1,psi_j}|^2 <= (2^k 2^(k-2))^2 in every
// archimedean embedding
bool abs_square_bounded(int k, u64 j);

// chi(theta_k) = B_{1,chi^{-1}} where theta_k = 2^{-k} sum a sigma_a^{-1};
// checked on the scaled form for the character chi_{j,delta}
bool stickelberger_matches(int k, u64 j, int delta);

struct BoundReport {
  int k;
  u64 big_n;  // N = 2^(k-3), number of odd characters in the minus block
  double worst_log10;
  double second_moment_log10;       // (2^(k-1)/3)^(N/2)
  double second_moment_weak_log10;  // (2^k/3)^(N/2), the proof-safe variant
  double functional_log10;
  std::size_t worst_digits;
  std::size_t second_moment_digits;
  std::size_t functional_digits;
};

BoundReport bounds_report(int k);

}  // namespace weber
