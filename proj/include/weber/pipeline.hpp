#pragma once
// Orchestration: Phase A (norm + factor + filter) feeding Phase B
// (order tests on survivors), an optional small-prime sieve slice, and
// the per-level verdict, emitted as a certificate. The tower driver
// verifies levels in ascending order; each level's non-vanishing step
// is only meaningful given h^+ = 1 one level down, so that dependency
// is recorded as an explicit assumption.

#include <string>
#include <vector>

#include "weber/certificate.hpp"

namespace weber {

// One level. base_assumption overrides the recorded h^+ dependency
// text; empty selects the published result for k-1 <= 8.
Certificate verify_level(int k, const CertificateConfig& cfg,
                         const std::string& base_assumption = "");

// Ascend k_from..k_to (4 <= k_from <= k_to <= 12), stopping after the
// first inconclusive level. Returns the certificates produced.
std::vector<Certificate> verify_tower(int k_from, int k_to, const CertificateConfig& cfg);

// Fast deterministic cross-check suite over small levels.
bool selftest(std::string* log = nullptr);

}  // namespace weber
