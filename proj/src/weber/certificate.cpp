#include "weber/certificate.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "weber/primes.hpp"

namespace weber {

namespace {

using nlohmann::json;

json config_to_json(const CertificateConfig& c) {
  json j;
  j["seed"] = std::to_string(c.seed);
  j["threads"] = c.threads;
  j["survivor_threshold"] = std::to_string(c.survivor_threshold);
  j["sieve_lo"] = std::to_string(c.sieve_lo);
  j["sieve_hi"] = std::to_string(c.sieve_hi);
  j["trial_bound"] = std::to_string(c.trial_bound);
  j["rho_iterations"] = std::to_string(c.rho_iterations);
  j["rho_restarts"] = c.rho_restarts;
  j["factor_backend"] = c.factor_backend;
  j["budget_seconds"] = c.budget_seconds;
  return j;
}

CertificateConfig config_from_json(const json& j) {
  CertificateConfig c;
  c.seed = std::stoull(j.at("seed").get<std::string>());
  c.threads = j.at("threads").get<int>();
  c.survivor_threshold = std::stoull(j.at("survivor_threshold").get<std::string>());
  c.sieve_lo = std::stoull(j.at("sieve_lo").get<std::string>());
  c.sieve_hi = std::stoull(j.at("sieve_hi").get<std::string>());
  c.trial_bound = std::stoull(j.at("trial_bound").get<std::string>());
  c.rho_iterations = std::stoull(j.at("rho_iterations").get<std::string>());
  c.rho_restarts = j.at("rho_restarts").get<int>();
  c.factor_backend = j.at("factor_backend").get<std::string>();
  c.budget_seconds = j.at("budget_seconds").get<double>();
  return c;
}

json factorization_to_json(const FactorizationResult& f) {
  json j;
  j["input"] = f.input.get_str();
  j["unresolved_cofactor"] = f.unresolved_cofactor.get_str();
  j["factors"] = json::array();
  for (const auto& e : f.factors) {
    json fe;
    fe["prime"] = e.prime.get_str();
    fe["exponent"] = e.exponent;
    fe["method"] = e.method;
    j["factors"].push_back(fe);
  }
  return j;
}

FactorizationResult factorization_from_json(const json& j) {
  FactorizationResult f;
  f.input = mpz_class(j.at("input").get<std::string>());
  f.unresolved_cofactor = mpz_class(j.at("unresolved_cofactor").get<std::string>());
  for (const auto& fe : j.at("factors")) {
    FactorEntry e;
    e.prime = mpz_class(fe.at("prime").get<std::string>());
    e.exponent = fe.at("exponent").get<unsigned>();
    e.method = fe.at("method").get<std::string>();
    f.factors.push_back(std::move(e));
  }
  return f;
}

json report_to_json(const WieferichReport& r) {
  json j;
  j["k"] = r.k;
  j["ell"] = r.ell.get_str();
  j["inertia_f"] = r.inertia_f;
  j["exponent_t"] = r.exponent_t.get_str();
  j["factor_degree"] = r.factor_degree;
  j["shortcut_used"] = r.shortcut_used;
  j["passes"] = r.passes;
  j["per_factor"] = json::array();
  for (const auto& pf : r.per_factor) {
    json e;
    e["factor"] = pf.factor_id;
    e["value"] = pf.value;
    e["powered"] = pf.powered;
    e["passed"] = pf.passed;
    j["per_factor"].push_back(e);
  }
  return j;
}

WieferichReport report_from_json(const json& j) {
  WieferichReport r;
  r.k = j.at("k").get<int>();
  r.ell = mpz_class(j.at("ell").get<std::string>());
  r.inertia_f = j.at("inertia_f").get<int>();
  r.exponent_t = mpz_class(j.at("exponent_t").get<std::string>());
  r.factor_degree = j.at("factor_degree").get<int>();
  r.shortcut_used = j.at("shortcut_used").get<bool>();
  r.passes = j.at("passes").get<bool>();
  for (const auto& e : j.at("per_factor")) {
    PerFactorReport pf;
    pf.factor_id = e.at("factor").get<std::string>();
    pf.value = e.at("value").get<std::string>();
    pf.powered = e.at("powered").get<std::string>();
    pf.passed = e.at("passed").get<bool>();
    r.per_factor.push_back(std::move(pf));
  }
  return r;
}

// full == false leaves out timings and digest (the digest preimage)
json certificate_to_json_obj(const Certificate& c, bool full) {
  json j;
  j["schema_version"] = c.schema_version;
  j["k"] = c.k;
  j["config"] = config_to_json(c.config);
  j["assumptions"] = c.assumptions;
  j["phase_a_character_j"] = std::to_string(c.character_j);
  j["scaled_digest"] = c.scaled_digest;
  j["norm"] = c.norm;
  j["factorization"] = factorization_to_json(c.factorization);
  j["survivors"] = c.survivors;
  j["filtered"] = json::array();
  for (const auto& f : c.filtered) {
    json e;
    e["prime"] = f.prime.get_str();
    e["reason"] = f.reason;
    j["filtered"].push_back(e);
  }
  j["phase_b"] = json::array();
  for (const auto& r : c.phase_b) j["phase_b"].push_back(report_to_json(r));
  {
    json s;
    s["enabled"] = c.small_prime_sieve.enabled;
    s["lo"] = std::to_string(c.small_prime_sieve.lo);
    s["hi"] = std::to_string(c.small_prime_sieve.hi);
    s["candidates"] = std::to_string(c.small_prime_sieve.candidates);
    s["primes_tested"] = std::to_string(c.small_prime_sieve.primes_tested);
    s["passing"] = std::to_string(c.small_prime_sieve.passing);
    s["failures"] = c.small_prime_sieve.failures;
    j["small_prime_sieve"] = s;
  }
  j["verdict"] = c.verdict;
  j["reasons"] = c.reasons;
  if (full) {
    j["timings"] = c.timings;
    // never re-seal: a stored digest is evidence, a missing one gets stamped
    j["digest"] = c.digest.empty() ? certificate_digest(c) : c.digest;
  }
  return j;
}

}  // namespace

std::string certificate_digest(const Certificate& c) {
  std::string pre = certificate_to_json_obj(c, false).dump(2);
  return "0x" + hex64(fnv1a_str(pre));
}

std::string certificate_to_json(const Certificate& c) {
  return certificate_to_json_obj(c, true).dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  Certificate c;
  c.schema_version = j.at("schema_version").get<int>();
  c.k = j.at("k").get<int>();
  c.config = config_from_json(j.at("config"));
  c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  c.character_j = std::stoull(j.at("phase_a_character_j").get<std::string>());
  c.scaled_digest = j.at("scaled_digest").get<std::string>();
  c.norm = j.at("norm").get<std::string>();
  c.factorization = factorization_from_json(j.at("factorization"));
  c.survivors = j.at("survivors").get<std::vector<std::string>>();
  for (const auto& e : j.at("filtered")) {
    FilteredPrime f;
    f.prime = mpz_class(e.at("prime").get<std::string>());
    f.reason = e.at("reason").get<std::string>();
    c.filtered.push_back(std::move(f));
  }
  for (const auto& e : j.at("phase_b")) c.phase_b.push_back(report_from_json(e));
  {
    const json& s = j.at("small_prime_sieve");
    c.small_prime_sieve.enabled = s.at("enabled").get<bool>();
    c.small_prime_sieve.lo = std::stoull(s.at("lo").get<std::string>());
    c.small_prime_sieve.hi = std::stoull(s.at("hi").get<std::string>());
    c.small_prime_sieve.candidates = std::stoull(s.at("candidates").get<std::string>());
    c.small_prime_sieve.primes_tested = std::stoull(s.at("primes_tested").get<std::string>());
    c.small_prime_sieve.passing = std::stoull(s.at("passing").get<std::string>());
    c.small_prime_sieve.failures = s.at("failures").get<std::vector<std::string>>();
  }
  c.verdict = j.at("verdict").get<std::string>();
  c.reasons = j.at("reasons").get<std::vector<std::string>>();
  c.timings = j.at("timings").get<std::map<std::string, double>>();
  c.digest = j.at("digest").get<std::string>();
  return c;
}

void certificate_write(const Certificate& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw domain_error("certificate_write: cannot open " + path);
  out << certificate_to_json(c);
}

Certificate certificate_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("certificate_read: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return certificate_from_json(ss.str());
}

std::vector<std::string> certificate_audit(const Certificate& c) {
  std::vector<std::string> problems;
  auto bad = [&](const std::string& s) { problems.push_back(s); };

  if (c.schema_version != 1) bad("unknown schema_version");
  if (c.k < 3 || c.k > 16) bad("k out of range");
  if (c.verdict != "verified" && c.verdict != "inconclusive") bad("unknown verdict");
  if (!c.digest.empty() && c.digest != certificate_digest(c)) bad("digest mismatch");

  // factorization: recombine, check tags and ordering (no refactoring)
  mpz_class norm_val(c.norm);
  if (c.factorization.input != norm_val) bad("factorization input != norm");
  mpz_class prod = c.factorization.unresolved_cofactor;
  mpz_class prev = 0;
  for (const auto& e : c.factorization.factors) {
    if (e.method != "trial" && e.method != "rho" && e.method != "external")
      bad("unknown factor method " + e.method);
    if (e.exponent < 1) bad("factor exponent < 1");
    if (e.prime <= prev) bad("factors not strictly ascending");
    prev = e.prime;
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), e.prime.get_mpz_t(), e.exponent);
    prod *= pw;
  }
  if (prod != c.factorization.input) bad("factor product != input");
  if (c.factorization.unresolved_cofactor < 1) bad("cofactor < 1");
  if (c.factorization.unresolved_cofactor > 1 &&
      is_probable_prime(c.factorization.unresolved_cofactor))
    bad("unresolved cofactor is prime (should be a factor)");

  // candidate partition: every known prime factor appears exactly once
  std::set<std::string> seen;
  for (const auto& s : c.survivors) seen.insert(s);
  for (const auto& f : c.filtered) {
    if (f.reason != "below-10^9-sieved" && f.reason != "congruence-failed")
      bad("unknown filter reason " + f.reason);
    seen.insert(f.prime.get_str());
  }
  if (seen.size() != c.survivors.size() + c.filtered.size())
    bad("survivor/filtered lists overlap");
  for (const auto& e : c.factorization.factors)
    if (!seen.count(e.prime.get_str())) bad("prime factor missing from candidate lists");

  // phase B reports internally coherent
  std::set<std::string> reported;
  for (const auto& r : c.phase_b) {
    reported.insert(r.ell.get_str());
    if (r.k != c.k) bad("phase B report for wrong k");
    if (r.inertia_f != 1 && r.inertia_f != 2) bad("bad inertia_f");
    if (r.factor_degree != 1 && r.factor_degree != 2) bad("bad factor_degree");
    if (r.per_factor.empty()) bad("phase B report with no factors");
    bool all = true;
    for (const auto& pf : r.per_factor) {
      if (pf.passed != (pf.powered != "1")) bad("per-factor pass bit inconsistent");
      if (!pf.passed) all = false;
    }
    if (all != r.passes) bad("report pass bit inconsistent");
  }

  // verdict soundness; an inconclusive run may legitimately leave
  // survivors untested (budget), so completeness binds "verified" only
  if (c.verdict == "verified") {
    for (const auto& s : c.survivors)
      if (!reported.count(s)) bad("verified with untested survivor " + s);
    if (!c.reasons.empty()) bad("verified with reasons attached");
    if (c.norm == "0") bad("verified with zero norm");
    if (!c.factorization.complete()) bad("verified with unresolved cofactor");
    for (const auto& r : c.phase_b)
      if (!r.passes) bad("verified with non-passing survivor " + r.ell.get_str());
    if (c.small_prime_sieve.enabled && !c.small_prime_sieve.failures.empty())
      bad("verified with sieve failures");
    if (!c.small_prime_sieve.enabled) {
      bool assumed = false;
      for (const auto& a : c.assumptions)
        if (a.find("sieve") != std::string::npos) assumed = true;
      if (!assumed) bad("no sieve slice and no recorded sieve assumption");
    }
  } else {
    if (c.reasons.empty()) bad("inconclusive without reasons");
  }

  // a claimed survivor failure must be substantiated by a non-passing report
  for (const auto& reason : c.reasons) {
    const std::string tag = "survivor-inconclusive:";
    if (reason.rfind(tag, 0) != 0) continue;
    std::string ell = reason.substr(tag.size());
    bool substantiated = false;
    for (const auto& r : c.phase_b)
      if (r.ell.get_str() == ell && !r.passes) substantiated = true;
    if (!substantiated) bad("reason " + reason + " has no matching failed report");
  }
  return problems;
}

}  // namespace weber
