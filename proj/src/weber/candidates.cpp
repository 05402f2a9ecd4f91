#include "weber/candidates.hpp"

namespace weber {

std::string filter_reason(const mpz_class& prime, int k, const mpz_class& threshold) {
  mpz_class h = mpz_class(1) << (k - 1);
  mpz_class r = prime % h;
  if (r != 1 && r != h - 1) return "congruence-failed";
  if (prime <= threshold) return "below-10^9-sieved";
  return "";
}

CandidateSet assemble_candidates(int k, const mpz_class& norm, const FactorBudget& budget,
                                 const mpz_class& threshold) {
  if (k < 3) throw domain_error("assemble_candidates: k out of range");
  if (norm < 1) throw domain_error("assemble_candidates: norm must be >= 1");
  CandidateSet cs;
  cs.k = k;
  cs.norm = norm;
  cs.factorization = factor(norm, budget);
  for (const auto& f : cs.factorization.factors) {
    std::string reason = filter_reason(f.prime, k, threshold);
    if (reason.empty())
      cs.survivors.push_back(f.prime);
    else
      cs.filtered.push_back({f.prime, reason});
  }
  return cs;
}

}  // namespace weber
