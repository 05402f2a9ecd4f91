#pragma once
// Phase A -> Phase B glue: from the norm's prime factors to the
// survivor set S_k via the congruence filter ell = +-1 (mod 2^(k-1))
// and the small-prime threshold handled by the separate sieve.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "weber/factorization.hpp"

namespace weber {

struct FilteredPrime {
  mpz_class prime;
  std::string reason;  // below-10^9-sieved | congruence-failed
};

struct CandidateSet {
  int k;
  mpz_class norm;
  FactorizationResult factorization;
  std::vector<mpz_class> survivors;    // ascending
  std::vector<FilteredPrime> filtered; // ascending by prime
};

// Exclusion reasons are checked in this order: congruence first (it is
// unconditional arithmetic), then the sieve threshold.
std::string filter_reason(const mpz_class& prime, int k, const mpz_class& threshold);

// default threshold 10^9 per the sieve coverage
CandidateSet assemble_candidates(int k, const mpz_class& norm, const FactorBudget& budget,
                                 const mpz_class& threshold = mpz_class(1000000000));

}  // namespace weber
