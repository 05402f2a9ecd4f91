#pragma once
// Integer factorization pipeline: 2-adic strip, trial division,
// Brent-cycle Pollard rho with a deterministic restart sequence, and
// an optional external factoring backend. Never claims completeness
// it cannot certify: the unresolved cofactor is exposed (and is a
// certified composite whenever it is > 1).

#include <string>
#include <vector>

#include <gmpxx.h>

#include "weber/common.hpp"

namespace weber {

struct FactorEntry {
  mpz_class prime;
  unsigned exponent;
  std::string method;  // trial | rho | external
};

struct FactorizationResult {
  mpz_class input;
  std::vector<FactorEntry> factors;  // ascending by prime
  mpz_class unresolved_cofactor;     // 1 when complete, else composite
  bool complete() const { return unresolved_cofactor == 1; }
};

struct FactorBudget {
  u64 trial_bound = 1000000;     // inclusive odd trial-division bound
  u64 rho_iterations = 2000000;  // Brent iterations per restart
  int rho_restarts = 24;
  u64 seed = 0x5eed;
  std::string backend;  // external factorizer path, empty = internal only
};

// One Brent-rho attempt; returns a nontrivial divisor of n or 0.
mpz_class pollard_brent(const mpz_class& n, u64 seed, u64 max_iterations);

FactorizationResult factor(const mpz_class& n, const FactorBudget& budget = {});

// recombine and verify: product of prime powers * cofactor == input,
// every prime probable-prime, cofactor 1 or composite
bool factorization_consistent(const FactorizationResult& r);

}  // namespace weber
