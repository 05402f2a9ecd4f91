#pragma once
// Audit certificates: a canonical JSON snapshot of one verification run
// (inputs, assumptions, Phase A data, Phase B reports, sieve slice,
// verdict). The digest covers everything except timings, so seeded
// reruns are byte-comparable after stripping the timing block.

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weber/candidates.hpp"
#include "weber/factorization.hpp"
#include "weber/wieferich.hpp"

namespace weber {

struct CertificateConfig {
  u64 seed = 0x5eed;
  int threads = 1;
  u64 survivor_threshold = 1000000000ull;  // candidates below are sieve territory
  u64 sieve_lo = 0, sieve_hi = 0;          // empty range: rely on the recorded assumption
  u64 trial_bound = 1000000;
  u64 rho_iterations = 2000000;
  int rho_restarts = 24;
  std::string factor_backend;  // external backend identity ("" if none)
  double budget_seconds = 0;   // 0: unlimited
};

struct SieveSlice {
  bool enabled = false;
  u64 lo = 0, hi = 0;
  u64 candidates = 0;
  u64 primes_tested = 0;
  u64 passing = 0;
  std::vector<std::string> failures;  // non-passing ells, decimal, ascending
};

struct Certificate {
  int schema_version = 1;
  int k = 0;
  CertificateConfig config;
  std::vector<std::string> assumptions;
  // Phase A
  u64 character_j = 1;
  std::string scaled_digest;  // hex64 of the scaled Bernoulli element
  std::string norm;           // |Nm(S)| / 2^(k m / 2), decimal
  FactorizationResult factorization;
  std::vector<std::string> survivors;  // decimal, ascending
  std::vector<FilteredPrime> filtered;
  // Phase B
  std::vector<WieferichReport> phase_b;
  SieveSlice small_prime_sieve;
  std::string verdict;  // "verified" | "inconclusive"
  std::vector<std::string> reasons;
  std::map<std::string, double> timings;  // seconds; excluded from the digest
  std::string digest;  // self-digest as read back from disk ("" until serialized)
};

// canonical JSON text (sorted keys, 2-space indent, trailing newline)
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

void certificate_write(const Certificate& c, const std::string& path);
Certificate certificate_read(const std::string& path);

// FNV-1a over the canonical JSON with timings omitted
std::string certificate_digest(const Certificate& c);

// Internal-consistency audit; no heavy recomputation. Returns the list
// of problems found (empty: certificate is sound).
std::vector<std::string> certificate_audit(const Certificate& c);

}  // namespace weber
