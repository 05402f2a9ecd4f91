#include "weber/factorization.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>

#include <unistd.h>

#include "weber/primes.hpp"

namespace weber {

mpz_class pollard_brent(const mpz_class& n, u64 seed, u64 max_iterations) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  fixed_rng rng(seed);
  mpz_class y = 2 + mpz_class(rng.next()) % (n - 3);
  mpz_class c = 1 + mpz_class(rng.next()) % (n - 2);
  mpz_class x, ys, q = 1, g = 1;
  const u64 batch = 128;
  u64 r = 1, iters = 0;
  while (g == 1 && iters < max_iterations) {
    x = y;
    for (u64 i = 0; i < r && iters < max_iterations; i++, iters++) y = (y * y + c) % n;
    for (u64 j = 0; j < r && g == 1 && iters < max_iterations; j += batch) {
      ys = y;
      u64 lim = std::min(batch, r - j);
      for (u64 i = 0; i < lim && iters < max_iterations; i++, iters++) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
    r <<= 1;
  }
  if (g == n) {
    // backtrack one step at a time
    do {
      ys = (ys * ys + c) % n;
      mpz_class d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == 1 || g == n) return 0;
  return g;
}

namespace {

// consult the external backend: decimal n on stdin, one prime factor
// per line on stdout, exit status 0. Output is re-verified; any
// irregularity falls back to the internal path.
// TODO: ship an ECM wrapper here; rho tops out well short of the
// ~130 digit odd parts that appear from level 10 up.
std::vector<mpz_class> run_backend(const std::string& path, const mpz_class& n) {
  std::vector<mpz_class> out;
  // temp-file handshake; popen is unidirectional
  std::string suffix = std::to_string(static_cast<long>(getpid()));
  std::string tmp_in = "/tmp/weber_backend_in." + suffix;
  std::string tmp_out = "/tmp/weber_backend_out." + suffix;
  {
    FILE* f = fopen(tmp_in.c_str(), "w");
    if (!f) return out;
    std::string dec = n.get_str();
    fwrite(dec.data(), 1, dec.size(), f);
    fputc('\n', f);
    fclose(f);
  }
  std::string full = path + " < " + tmp_in + " > " + tmp_out + " 2>/dev/null";
  int rc = std::system(full.c_str());
  if (rc != 0) return out;
  FILE* f = fopen(tmp_out.c_str(), "r");
  if (!f) return out;
  char buf[4096];
  while (fgets(buf, sizeof buf, f)) {
    std::string line(buf);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) continue;
    mpz_class p;
    if (mpz_set_str(p.get_mpz_t(), line.c_str(), 10) != 0) {
      out.clear();
      break;
    }
    out.push_back(p);
  }
  fclose(f);
  // verification: primes, and product divides (must equal) n
  mpz_class prod = 1;
  for (const auto& p : out) {
    if (p < 2 || !is_probable_prime(p)) {
      out.clear();
      return out;
    }
    prod *= p;
  }
  if (!out.empty() && prod != n) out.clear();
  return out;
}

}  // namespace

FactorizationResult factor(const mpz_class& n, const FactorBudget& budget) {
  if (n < 1) throw domain_error("factor: n must be >= 1");
  FactorizationResult res;
  res.input = n;
  res.unresolved_cofactor = 1;
  if (n == 1) return res;
  std::map<mpz_class, std::pair<unsigned, std::string>> found;
  mpz_class rem = n;
  // 2-adic part
  if (mpz_even_p(rem.get_mpz_t())) {
    unsigned long e = mpz_scan1(rem.get_mpz_t(), 0);
    found[2] = {static_cast<unsigned>(e), "trial"};
    rem >>= e;
  }
  // odd trial division
  for (u64 p = 3; p <= budget.trial_bound && rem > 1; p += 2) {
    if (mpz_cmp_ui(rem.get_mpz_t(), p * p) < 0) break;  // rem is prime
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
    unsigned e = 0;
    do {
      rem /= p;
      e++;
    } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
    found[mpz_class(p)] = {e, "trial"};
    // trial division is exhaustive below the bound: once rem < bound^2
    // and rem > 1, rem is prime, but the probable-prime loop below
    // catches that case anyway
  }
  std::vector<std::pair<mpz_class, std::string>> stack;
  if (rem > 1) stack.emplace_back(rem, "trial");
  int rho_round = 0;
  while (!stack.empty()) {
    auto [c, how] = stack.back();
    stack.pop_back();
    if (is_probable_prime(c)) {
      auto it = found.find(c);
      if (it == found.end())
        found[c] = {1, how};
      else
        it->second.first++;
      continue;
    }
    if (!budget.backend.empty()) {
      std::vector<mpz_class> ext = run_backend(budget.backend, c);
      if (!ext.empty()) {
        for (const auto& p : ext) {
          auto it = found.find(p);
          if (it == found.end())
            found[p] = {1, "external"};
          else
            it->second.first++;
        }
        continue;
      }
    }
    mpz_class d = 0;
    for (int t = 0; t < budget.rho_restarts && d == 0; t++) {
      d = pollard_brent(c, budget.seed + 0x9e3779b97f4a7c15ull * static_cast<u64>(++rho_round),
                        budget.rho_iterations);
    }
    if (d == 0) {
      res.unresolved_cofactor *= c;
      continue;
    }
    stack.emplace_back(d, "rho");
    stack.emplace_back(c / d, "rho");
  }
  for (const auto& [p, ev] : found) res.factors.push_back({p, ev.first, ev.second});
  return res;
}

bool factorization_consistent(const FactorizationResult& r) {
  mpz_class prod = r.unresolved_cofactor;
  if (prod < 1) return false;
  if (prod != 1 && is_probable_prime(prod)) return false;  // must be composite
  for (const auto& f : r.factors) {
    if (!is_probable_prime(f.prime)) return false;
    for (unsigned i = 0; i < f.exponent; i++) prod *= f.prime;
  }
  return prod == r.input;
}

}  // namespace weber
