// weber: command-line driver for the tower verification pipeline.
// Exit codes: 0 success/verified, 2 inconclusive, 1 error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "weber/bernoulli.hpp"
#include "weber/certificate.hpp"
#include "weber/pipeline.hpp"

using nlohmann::json;

namespace {

int run_bernoulli_norm(int k, weber::u64 j, bool as_json) {
  weber::ScaledBernoulli sb = weber::compute_bernoulli(k, j, 1);
  mpz_class norm = weber::bernoulli_norm(k, j);
  if (as_json) {
    json out;
    out["k"] = k;
    out["j"] = std::to_string(j);
    out["norm"] = norm.get_str();
    out["digits"] = weber::digits10(norm);
    out["scaled_digest"] = "0x" + weber::hex64(weber::cyc_digest(sb.scaled));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "norm(k=" << k << ", j=" << j << ") = " << norm.get_str() << "  ("
              << weber::digits10(norm) << " digits)\n";
  }
  return 0;
}

int run_sieve(int k, weber::u64 lo, weber::u64 hi, const std::string& checkpoint, int jobs,
              bool as_json) {
  weber::SieveOptions opts;
  opts.jobs = jobs;
  opts.checkpoint_path = checkpoint;
  weber::SieveSummary s = weber::fk_sieve(k, lo, hi, opts);
  weber::u64 total_failures = s.non_passing + s.prior_failures;
  if (as_json) {
    json out;
    out["k"] = s.k;
    out["lo"] = std::to_string(s.lo);
    out["hi"] = std::to_string(s.hi);
    out["candidates"] = std::to_string(s.candidates);
    out["primes_tested"] = std::to_string(s.primes_tested);
    out["passing"] = std::to_string(s.passing);
    out["non_passing"] = std::to_string(s.non_passing);
    out["skipped_chunks"] = std::to_string(s.skipped_chunks);
    out["prior_failures"] = std::to_string(s.prior_failures);
    json fl = json::array();
    for (const auto& f : s.failures) fl.push_back(f.ell.get_str());
    out["failures"] = fl;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "sieve k=" << s.k << " [" << s.lo << ", " << s.hi << "): " << s.candidates
              << " candidates, " << s.primes_tested << " primes, " << s.passing << " passing, "
              << s.non_passing << " non-passing";
    if (s.skipped_chunks)
      std::cout << " (+" << s.skipped_chunks << " chunks resumed, " << s.prior_failures
                << " prior failures)";
    std::cout << "\n";
  }
  return total_failures == 0 ? 0 : 2;
}

json report_json(const weber::WieferichReport& r) {
  json out;
  out["k"] = r.k;
  out["ell"] = r.ell.get_str();
  out["inertia_f"] = r.inertia_f;
  out["exponent_t"] = r.exponent_t.get_str();
  out["factor_degree"] = r.factor_degree;
  out["shortcut_used"] = r.shortcut_used;
  out["passes"] = r.passes;
  json pf = json::array();
  for (const auto& p : r.per_factor) {
    json e;
    e["factor"] = p.factor_id;
    e["value"] = p.value;
    e["powered"] = p.powered;
    e["passed"] = p.passed;
    pf.push_back(e);
  }
  out["per_factor"] = pf;
  return out;
}

int run_wieferich(int k, const std::string& prime, bool fallback, bool as_json) {
  mpz_class ell(prime);
  weber::WieferichReport r = weber::wieferich_test(k, ell, fallback);
  if (as_json) {
    std::cout << report_json(r).dump(2) << "\n";
  } else {
    std::cout << "ell=" << r.ell.get_str() << " k=" << r.k << " inertia_f=" << r.inertia_f
              << " t=" << r.exponent_t.get_str() << " degree=" << r.factor_degree
              << (r.shortcut_used ? " [shortcut]" : " [fallback]") << "\n";
    for (const auto& p : r.per_factor)
      std::cout << "  " << p.factor_id << ": value=" << p.value << " powered=" << p.powered
                << (p.passed ? " pass" : " FAIL") << "\n";
    std::cout << (r.passes ? "passes" : "inconclusive") << "\n";
  }
  return r.passes ? 0 : 2;
}

std::string out_path_for(const std::string& base, int k, bool multi) {
  if (!multi) return base;
  std::string p = base;
  std::string suffix = ".k" + std::to_string(k);
  std::size_t dot = p.rfind('.');
  if (dot == std::string::npos || dot == 0)
    p += suffix;
  else
    p.insert(dot, suffix);
  return p;
}

int run_verify(int k, int tower_from, const weber::CertificateConfig& cfg,
               const std::string& out_file, bool as_json) {
  int k0 = tower_from > 0 ? tower_from : k;
  std::vector<weber::Certificate> certs = weber::verify_tower(k0, k, cfg);
  bool multi = certs.size() > 1;
  bool all_verified = true;
  json levels = json::array();
  for (const auto& c : certs) {
    if (c.verdict != "verified") all_verified = false;
    if (!out_file.empty()) weber::certificate_write(c, out_path_for(out_file, c.k, multi));
    if (as_json) {
      json e;
      e["k"] = c.k;
      e["verdict"] = c.verdict;
      e["norm"] = c.norm;
      e["survivors"] = c.survivors;
      e["reasons"] = c.reasons;
      e["digest"] = weber::certificate_digest(c);
      levels.push_back(e);
    } else {
      std::cout << "k=" << c.k << ": " << c.verdict << " (norm " << weber::digits10(mpz_class(c.norm))
                << " digits, " << c.survivors.size() << " survivors";
      for (const auto& r : c.reasons) std::cout << "; " << r;
      std::cout << ")\n";
    }
  }
  if (as_json) {
    json out;
    out["levels"] = levels;
    out["verdict"] = all_verified ? "verified" : "inconclusive";
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (all_verified ? "verified" : "inconclusive") << "\n";
  }
  return all_verified ? 0 : 2;
}

int run_bounds(int k, bool as_json) {
  weber::BoundReport b = weber::bounds_report(k);
  if (as_json) {
    json out;
    out["k"] = b.k;
    out["N"] = std::to_string(b.big_n);
    out["worst_log10"] = b.worst_log10;
    out["second_moment_log10"] = b.second_moment_log10;
    out["second_moment_weak_log10"] = b.second_moment_weak_log10;
    out["functional_log10"] = b.functional_log10;
    out["worst_digits"] = b.worst_digits;
    out["second_moment_digits"] = b.second_moment_digits;
    out["functional_digits"] = b.functional_digits;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "k=" << b.k << " N=" << b.big_n << "\n"
              << "  worst-case      : 10^" << b.worst_log10 << " (" << b.worst_digits
              << " digits)\n"
              << "  second-moment   : 10^" << b.second_moment_log10 << " ("
              << b.second_moment_digits << " digits)\n"
              << "  functional-eq   : 10^" << b.functional_log10 << " (" << b.functional_digits
              << " digits)\n";
  }
  return 0;
}

int run_audit(const std::string& path, bool as_json) {
  weber::Certificate c = weber::certificate_read(path);
  std::vector<std::string> problems = weber::certificate_audit(c);
  if (as_json) {
    json out;
    out["k"] = c.k;
    out["verdict"] = c.verdict;
    out["digest"] = c.digest;
    out["problems"] = problems;
    out["sound"] = problems.empty();
    std::cout << out.dump(2) << "\n";
  } else {
    if (problems.empty()) {
      std::cout << "certificate sound: k=" << c.k << " verdict=" << c.verdict << "\n";
    } else {
      for (const auto& p : problems) std::cout << "problem: " << p << "\n";
    }
  }
  return problems.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weber tower verification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow the global flags after the subcommand name

  bool as_json = false;
  weber::u64 seed = 0x5eed;
  int threads = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--seed", seed, "deterministic seed recorded in certificates");
  app.add_option("--threads", threads, "worker threads where supported");

  auto* c_norm = app.add_subcommand("bernoulli-norm", "scaled Bernoulli norm at level k");
  int bn_k = 4;
  weber::u64 bn_j = 1;
  c_norm->add_option("--k", bn_k, "tower level")->required();
  c_norm->add_option("--j", bn_j, "character index (odd)");

  auto* c_sieve = app.add_subcommand("sieve", "small-prime unit order sieve");
  int sv_k = 4;
  weber::u64 sv_lo = 3, sv_hi = 0;
  std::string sv_ck;
  int sv_jobs = 0;
  c_sieve->add_option("--k", sv_k, "tower level")->required();
  c_sieve->add_option("--from", sv_lo, "range start (inclusive)")->required();
  c_sieve->add_option("--to", sv_hi, "range end (exclusive)")->required();
  c_sieve->add_option("--checkpoint", sv_ck, "resume/progress file");
  c_sieve->add_option("--jobs", sv_jobs, "worker threads");

  auto* c_wief = app.add_subcommand("wieferich", "unit order test at one prime");
  int wf_k = 4;
  std::string wf_prime;
  bool wf_fallback = false;
  c_wief->add_option("--k", wf_k, "tower level")->required();
  c_wief->add_option("--prime", wf_prime, "admissible prime ell")->required();
  c_wief->add_flag("--fallback", wf_fallback, "per-factor scalar powering instead of the shortcut");

  auto* c_verify = app.add_subcommand("verify", "full Phase A + Phase B verification");
  int vf_k = 4, vf_from = 0;
  std::string vf_backend, vf_out;
  double vf_budget = 0;
  c_verify->add_option("--k", vf_k, "target level")->required();
  c_verify->add_option("--tower-from", vf_from, "start level for a tower ascent");
  c_verify->add_option("--factor-backend", vf_backend, "external factoring helper");
  c_verify->add_option("--budget", vf_budget, "time budget in seconds (0: unlimited)");
  c_verify->add_option("--out", vf_out, "certificate output path");

  auto* c_bounds = app.add_subcommand("bounds", "analytic norm size bounds");
  int bd_k = 4;
  c_bounds->add_option("--k", bd_k, "tower level")->required();

  auto* c_audit = app.add_subcommand("audit", "re-validate a certificate file");
  std::string au_path;
  c_audit->add_option("--cert", au_path, "certificate path")->required();

  app.add_subcommand("selftest", "fast deterministic cross-check suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_norm->parsed()) return run_bernoulli_norm(bn_k, bn_j, as_json);
    if (c_sieve->parsed()) {
      int jobs = sv_jobs > 0 ? sv_jobs : threads;
      return run_sieve(sv_k, sv_lo, sv_hi, sv_ck, jobs, as_json);
    }
    if (c_wief->parsed()) return run_wieferich(wf_k, wf_prime, wf_fallback, as_json);
    if (c_verify->parsed()) {
      weber::CertificateConfig cfg;
      cfg.seed = seed;
      cfg.threads = threads;
      cfg.factor_backend = vf_backend;
      cfg.budget_seconds = vf_budget;
      return run_verify(vf_k, vf_from, cfg, vf_out, as_json);
    }
    if (c_bounds->parsed()) return run_bounds(bd_k, as_json);
    if (c_audit->parsed()) return run_audit(au_path, as_json);
    // selftest
    std::string log;
    bool ok = weber::selftest(&log);
    std::cout << log << (ok ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
    return ok ? 0 : 1;
  } catch (const weber::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
