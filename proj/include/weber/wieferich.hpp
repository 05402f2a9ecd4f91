#pragma once
// Phase B: Wieferich-style order tests for the cyclotomic unit xi_5 in
// residue fields of K_k^+, the small-prime candidate sieve, and the
// experimental Thaine-annihilator gcd check.
//
// Residue semantics, fixed by the tower structure mod 2^k:
//   admissible ell: odd prime, ell = +-1 (mod 2^(k-1)); four classes
//     1: ell =  1         (mod 2^k)   -> g_k splits, linear factors
//     2: ell =  1+2^(k-1) (mod 2^k)   -> quadratic factors x^2 - c
//     3: ell = -1         (mod 2^k)   -> splits, linear factors
//     4: ell = -1+2^(k-1) (mod 2^k)   -> quadratic factors x^2 - c
//   report fields follow the congruence split (inertia_f = 1 iff
//   ell = 1 mod 2^(k-1)); factor degrees follow frobenius_order.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "weber/common.hpp"

namespace weber {

struct PerFactorReport {
  std::string factor_id;  // "x-5" or "x^2-14", constants in [0, ell)
  std::string value;      // xi_5 at the factor, decimal
  std::string powered;    // value^t, decimal
  bool passed;            // powered != 1
};

struct WieferichReport {
  int k = 0;
  mpz_class ell;
  int inertia_f = 0;      // 1 iff ell = 1 (mod 2^(k-1)), else 2
  mpz_class exponent_t;   // (ell^inertia_f - 1)/2^(k-1), exact
  int factor_degree = 0;  // frobenius_order(ell, k)
  bool shortcut_used = false;
  std::vector<PerFactorReport> per_factor;
  bool passes = false;  // every factor passed
};

// order of ell's image in Gal(K_k^+/Q) ~ Z/2^(k-2):
// f = 2^(k-2) / gcd(s, 2^(k-2)) with ell = (-1)^eps 5^s (mod 2^k)
u64 frobenius_order(const mpz_class& ell, int k);

// 1..4 per the table above, 0 if ell is in no admissible class
int congruence_class(const mpz_class& ell, int k);
bool admissible(const mpz_class& ell, int k);

// monic irreducible factors of g_k mod ell, canonically sorted:
// ascending root for linear, ascending constant for quadratic.
// Each factor is an ascending coefficient vector.
std::vector<std::vector<u64>> factor_minpoly_mod(int k, u64 ell);

// the same by Cantor-Zassenhaus random-shift splitting (fixed seed);
// linear case only, used to cross-validate the structural path
std::vector<std::vector<u64>> factor_minpoly_mod_cz(int k, u64 ell, u64 seed);

WieferichReport wieferich_test(int k, const mpz_class& ell, bool use_fallback = false);

struct SieveOptions {
  int jobs = 1;
  u64 chunk = 1 << 16;          // candidate-value range per checkpoint unit
  std::string checkpoint_path;  // optional resume file, lines "k lo hi failures"
};

struct SieveSummary {
  int k = 0;
  u64 lo = 0, hi = 0;
  u64 candidates = 0;     // values c*2^(k-1) +- 1 in [lo, hi)
  u64 primes_tested = 0;  // candidates passing the primality test
  u64 passing = 0;
  u64 non_passing = 0;
  u64 skipped_chunks = 0;        // completed in a previous run
  u64 prior_failures = 0;        // failure count carried by the checkpoint
  std::vector<WieferichReport> failures;  // non-passing reports, ascending ell
};

SieveSummary fk_sieve(int k, u64 lo, u64 hi, const SieveOptions& opts = {});

// candidates c*2^(k-1) +- 1 in [lo, hi), ascending
std::vector<u64> sieve_candidates(int k, u64 lo, u64 hi);

// smallest element of multiplicative order exactly 2^k mod q
u64 thaine_eta(int k, u64 q);

// c_a = floor(a * (eta^a mod q) / q) for odd a in (0, 2^k), ascending
std::vector<mpz_class> thaine_coefficients(int k, u64 q);

// true iff gcd(P_1, P_2, Phi_m) = 1 in F_ell[x] where P_i is the
// chi_j-projection of theta_{q_i}. Experimental: a true result never
// upgrades a pipeline verdict by itself.
bool thaine_check(int k, u64 q1, u64 q2, u64 j, u64 ell);

}  // namespace weber
