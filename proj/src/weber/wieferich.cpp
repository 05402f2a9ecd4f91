#include "weber/wieferich.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "weber/cyclotomic.hpp"
#include "weber/intpoly.hpp"
#include "weber/modpoly.hpp"
#include "weber/primes.hpp"
#include "weber/tower.hpp"

namespace weber {

u64 frobenius_order(const mpz_class& ell, int k) {
  if (k < 3 || k > 16) throw domain_error("frobenius_order: k out of range");
  if (ell == 2) throw domain_error("frobenius_order: ell = 2 is ramified");
  u64 n = 1ull << (k - 2);
  u64 r = mpz_fdiv_ui(ell.get_mpz_t(), 1ull << k);
  if ((r & 1) == 0) throw domain_error("frobenius_order: ell must be odd");
  TwoAdicDecomp d = two_adic_decompose(r, k);
  return n / std::gcd(d.s == 0 ? n : d.s, n);
}

int congruence_class(const mpz_class& ell, int k) {
  if (k < 3 || k > 16) throw domain_error("congruence_class: k out of range");
  u64 f = 1ull << k, h = f >> 1;
  u64 r = mpz_fdiv_ui(ell.get_mpz_t(), f);
  if (r == 1) return 1;
  if (r == 1 + h) return 2;
  if (r == f - 1) return 3;
  if (r == h - 1) return 4;
  return 0;
}

bool admissible(const mpz_class& ell, int k) {
  return ell >= 3 && congruence_class(ell, k) != 0 && is_probable_prime(ell);
}

namespace {

// xi_5 as V_5; even polynomial, so its residue at x^2 = c is scalar
const std::vector<mpz_class>& v5_coeffs() {
  static const std::vector<mpz_class> v{1, 0, -3, 0, 1};
  return v;
}

template <class M>
struct Engine {
  int k;
  int cls;   // congruence class 1..4
  int deg;   // factor degree: 1 for classes 1,3; 2 for classes 2,4
  M m;
  mpz_class ell_z;
  PolyOps<M> P;
  typename PolyOps<M>::poly g;
  using elt = typename M::elt;

  Engine(int k_, M m_, mpz_class ell) : k(k_), m(m_), ell_z(std::move(ell)) {
    cls = congruence_class(ell_z, k);
    if (cls == 0) throw domain_error("wieferich: ell not admissible");
    deg = (cls == 1 || cls == 3) ? 1 : 2;
    P.m = m;
    g = P.from_mpz(minimal_polynomial(k).c);
  }

  // Linear-case roots r_a = z^a + z^-a (a odd), or quadratic-case
  // constants c_a = z^(2a) + z^(-2a) + 2, via an order-2^k element z
  // of F_{ell^2}. Every value is asserted to land in F_ell.
  std::vector<elt> structural_values() {
    Quad<M> F{m, find_nonresidue(m, ell_z)};
    mpz_class e = (ell_z * ell_z - 1) >> k;
    typename Quad<M>::elt z{};
    elt minus1 = m.reduce_mpz(ell_z - 1);
    bool found = false;
    for (u64 cand = 1; cand <= 2000 && !found; cand++) {
      auto u = F.make(m.reduce_mpz(mpz_class(cand)), m.one());
      z = F.pow(u, e);
      auto zh = F.pow(z, mpz_class(1) << (k - 1));
      if (F.in_base(zh) && m.eq(zh.a, minus1)) found = true;
    }
    if (!found) throw integrity_error("wieferich: no element of order 2^k");
    auto add = [&](const typename Quad<M>::elt& x, const typename Quad<M>::elt& y) ->
        typename Quad<M>::elt { return {m.add(x.a, y.a), m.add(x.b, y.b)}; };
    std::vector<elt> vals;
    if (deg == 1) {
      // a odd in [1, 2^(k-1)): the n distinct roots
      auto za = z;
      auto z2 = F.mul(z, z);
      for (u64 a = 1; a < (1ull << (k - 1)); a += 2) {
        auto r = add(za, F.inv(za));
        if (!F.in_base(r)) throw integrity_error("wieferich: root not in F_ell");
        vals.push_back(r.a);
        za = F.mul(za, z2);
      }
    } else {
      // a odd in [1, 2^(k-2)): the n/2 distinct quadratic constants
      auto zb = F.mul(z, z);
      auto zba = zb;
      auto zb2 = F.mul(zb, zb);
      elt two = m.add(m.one(), m.one());
      for (u64 a = 1; a < (1ull << (k - 2)); a += 2) {
        auto c = add(zba, F.inv(zba));
        if (!F.in_base(c)) throw integrity_error("wieferich: quadratic constant not in F_ell");
        vals.push_back(m.add(c.a, two));
        zba = F.mul(zba, zb2);
      }
    }
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 1; i < vals.size(); i++)
      if (m.eq(vals[i - 1], vals[i])) throw integrity_error("wieferich: repeated factor");
    // product of the factors must reconstruct g_k mod ell
    typename PolyOps<M>::poly prod{m.one()};
    for (const elt& v : vals) {
      typename PolyOps<M>::poly fac;
      if (deg == 1)
        fac = {m.neg(v), m.one()};
      else
        fac = {m.neg(v), m.zero(), m.one()};
      prod = P.mul(prod, fac);
    }
    if (!P.eq(prod, g)) throw integrity_error("wieferich: factor product != g_k mod ell");
    return vals;
  }

  WieferichReport run(bool use_fallback, int inertia_f, const mpz_class& t) {
    WieferichReport rep;
    rep.k = k;
    rep.ell = ell_z;
    rep.inertia_f = inertia_f;
    rep.exponent_t = t;
    rep.factor_degree = deg;
    rep.shortcut_used = !use_fallback;
    std::vector<elt> vals = structural_values();
    // xi_5 at a factor: with c = r^2 (deg 1) or c the constant (deg 2),
    // the value is c^2 - 3c + 1
    elt three = m.reduce_mpz(mpz_class(3));
    auto unit_value = [&](const elt& v) {
      elt c = deg == 1 ? m.mul(v, v) : v;
      return m.add(m.sub(m.mul(c, c), m.mul(three, c)), m.one());
    };
    typename PolyOps<M>::poly w;
    if (!use_fallback) w = P.powmod(P.from_mpz(v5_coeffs()), t, g);
    rep.passes = true;
    for (const elt& v : vals) {
      PerFactorReport pf;
      elt u = unit_value(v);
      elt powered;
      if (use_fallback) {
        powered = m.pow(u, t);
      } else if (deg == 1) {
        powered = P.eval(w, v);
      } else {
        // reduce w mod x^2 - c: even part at c, odd part must vanish
        elt a = m.zero(), b = m.zero(), cp = m.one();
        for (std::size_t i = 0; i < w.size(); i += 2) {
          a = m.add(a, m.mul(w[i], cp));
          if (i + 1 < w.size()) b = m.add(b, m.mul(w[i + 1], cp));
          cp = m.mul(cp, v);
        }
        if (!m.is_zero(b)) throw integrity_error("wieferich: shortcut residue not scalar");
        powered = a;
      }
      pf.passed = !m.eq(powered, m.one());
      std::ostringstream id;
      if (deg == 1)
        id << "x-" << to_dec(v);
      else
        id << "x^2-" << to_dec(v);
      pf.factor_id = id.str();
      pf.value = to_dec(u);
      pf.powered = to_dec(powered);
      if (!pf.passed) rep.passes = false;
      rep.per_factor.push_back(std::move(pf));
    }
    if (!use_fallback) {
      // gcd(w - 1, g) must be trivial exactly when all factors pass
      auto gw = P.gcd(P.sub(w, {m.one()}), g);
      bool gcd_trivial = gw.size() == 1;
      if (gcd_trivial != rep.passes)
        throw integrity_error("wieferich: gcd shortcut disagrees with per-factor bits");
    }
    return rep;
  }

  static std::string to_dec(u64 v) { return std::to_string(v); }
  static std::string to_dec(const mpz_class& v) { return v.get_str(); }
};

}  // namespace

std::vector<std::vector<u64>> factor_minpoly_mod(int k, u64 ell) {
  mpz_class lz(ell);
  if (!admissible(lz, k)) throw domain_error("factor_minpoly_mod: ell not admissible");
  Engine<U64Mod> eng(k, U64Mod{ell}, lz);
  auto vals = eng.structural_values();
  std::vector<std::vector<u64>> out;
  for (u64 v : vals) {
    if (eng.deg == 1)
      out.push_back({v ? ell - v : 0, 1});
    else
      out.push_back({v ? ell - v : 0, 0, 1});
  }
  return out;
}

std::vector<std::vector<u64>> factor_minpoly_mod_cz(int k, u64 ell, u64 seed) {
  mpz_class lz(ell);
  if (!admissible(lz, k)) throw domain_error("factor_minpoly_mod_cz: ell not admissible");
  int cls = congruence_class(lz, k);
  if (cls != 1 && cls != 3) throw domain_error("factor_minpoly_mod_cz: linear case only");
  U64Mod m{ell};
  PolyOps<U64Mod> P{m};
  auto g = P.from_mpz(minimal_polynomial(k).c);
  mpz_class half = (lz - 1) / 2;
  fixed_rng rng(seed);
  std::vector<std::vector<u64>> stack{g}, done;
  while (!stack.empty()) {
    auto f = stack.back();
    stack.pop_back();
    if (f.size() == 2) {
      done.push_back(f);
      continue;
    }
    // random shift split: gcd((x+s)^((ell-1)/2) - 1, f)
    u64 s = rng.below(ell);
    auto h = P.powmod(std::vector<u64>{s, 1}, half, f);
    h = P.sub(h, {1});
    auto d = P.gcd(h, f);
    if (d.size() <= 1 || d.size() == f.size()) {
      stack.push_back(f);  // unlucky shift, retry with next seed draw
      continue;
    }
    // f / d by repeated monic division
    auto q = f;
    {
      // synthetic division f = d * q
      std::vector<u64> quot(f.size() - d.size() + 1, 0);
      auto rem = f;
      for (std::size_t i = quot.size(); i-- > 0;) {
        u64 top = rem[i + d.size() - 1];
        quot[i] = top;
        if (top == 0) continue;
        for (std::size_t j = 0; j < d.size(); j++)
          rem[i + j] = m.sub(rem[i + j], m.mul(top, d[j]));
      }
      for (std::size_t j = 0; j + 1 < d.size(); j++)
        if (rem[j] != 0) throw integrity_error("cz: non-exact split");
      q = quot;
    }
    stack.push_back(d);
    stack.push_back(q);
  }
  std::sort(done.begin(), done.end(), [&](const auto& a, const auto& b) {
    u64 ra = a[0] ? ell - a[0] : 0, rb = b[0] ? ell - b[0] : 0;
    return ra < rb;
  });
  return done;
}

WieferichReport wieferich_test(int k, const mpz_class& ell, bool use_fallback) {
  if (k < 3 || k > 16) throw domain_error("wieferich_test: k out of range");
  if (ell == 2 || !admissible(ell, k)) throw domain_error("wieferich_test: ell not admissible");
  u64 h = 1ull << (k - 1);
  int inertia_f = mpz_fdiv_ui(ell.get_mpz_t(), h) == 1 ? 1 : 2;
  mpz_class lf = ell;
  if (inertia_f == 2) lf *= ell;
  lf -= 1;
  if (!mpz_divisible_2exp_p(lf.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 1)))
    throw integrity_error("wieferich_test: exponent not integral");
  mpz_class t = lf >> (k - 1);
  if (mpz_fits_ulong_p(ell.get_mpz_t())) {
    Engine<U64Mod> eng(k, U64Mod{ell.get_ui()}, ell);
    return eng.run(use_fallback, inertia_f, t);
  }
  Engine<MpzMod> eng(k, MpzMod{ell}, ell);
  return eng.run(use_fallback, inertia_f, t);
}

std::vector<u64> sieve_candidates(int k, u64 lo, u64 hi) {
  std::vector<u64> out;
  if (lo >= hi) return out;
  u64 h = 1ull << (k - 1);
  for (u64 c = lo / h; c * h <= hi; c++) {
    u64 base = c * h;
    if (c >= 1 && base - 1 >= lo && base - 1 < hi) out.push_back(base - 1);
    if (base + 1 >= lo && base + 1 < hi) out.push_back(base + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct ChunkResult {
  u64 candidates = 0, primes = 0, passing = 0, non_passing = 0;
  std::vector<WieferichReport> failures;
};

ChunkResult sieve_chunk(int k, u64 a, u64 b) {
  ChunkResult r;
  for (u64 cand : sieve_candidates(k, a, b)) {
    r.candidates++;
    if (cand < 3 || !is_prime_u64(cand)) continue;
    r.primes++;
    mpz_class lz(cand);
    WieferichReport rep = wieferich_test(k, lz, false);
    WieferichReport fb = wieferich_test(k, lz, true);
    if (rep.passes != fb.passes || rep.per_factor.size() != fb.per_factor.size())
      throw integrity_error("fk_sieve: shortcut/fallback mismatch");
    for (std::size_t i = 0; i < rep.per_factor.size(); i++)
      if (rep.per_factor[i].powered != fb.per_factor[i].powered)
        throw integrity_error("fk_sieve: shortcut/fallback factor mismatch");
    if (rep.passes)
      r.passing++;
    else {
      r.non_passing++;
      r.failures.push_back(std::move(rep));
    }
  }
  return r;
}

}  // namespace

SieveSummary fk_sieve(int k, u64 lo, u64 hi, const SieveOptions& opts) {
  if (k < 4 || k > 12) throw domain_error("fk_sieve: k must be in [4,12]");
  SieveSummary s;
  s.k = k;
  s.lo = lo;
  s.hi = hi;
  if (lo >= hi) return s;
  u64 chunk = opts.chunk ? opts.chunk : 1ull << 16;
  u64 nchunks = (hi - lo + chunk - 1) / chunk;
  // previously completed chunks, keyed by exact [lo, hi)
  std::map<std::pair<u64, u64>, u64> completed;
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      int ck;
      u64 clo, chi, cf;
      if (ls >> ck >> clo >> chi >> cf) {
        if (ck == k) completed[{clo, chi}] = cf;
      }
    }
  }
  std::vector<ChunkResult> results(nchunks);
  std::vector<char> have(nchunks, 0), skip(nchunks, 0);
  for (u64 i = 0; i < nchunks; i++) {
    u64 a = lo + i * chunk, b = std::min(hi, a + chunk);
    auto it = completed.find({a, b});
    if (it != completed.end()) {
      skip[i] = 1;
      s.skipped_chunks++;
      s.prior_failures += it->second;
    }
  }
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<u64> next{0};
  auto worker = [&]() {
    while (true) {
      u64 i = next.fetch_add(1);
      if (i >= nchunks) break;
      if (skip[i]) {
        std::lock_guard<std::mutex> lk(mu);
        have[i] = 1;
        cv.notify_all();
        continue;
      }
      u64 a = lo + i * chunk, b = std::min(hi, a + chunk);
      ChunkResult r = sieve_chunk(k, a, b);
      std::lock_guard<std::mutex> lk(mu);
      results[i] = std::move(r);
      have[i] = 1;
      cv.notify_all();
    }
  };
  int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; j++) pool.emplace_back(worker);
  // commit in order: deterministic merge + incremental checkpointing
  std::ofstream ck;
  if (!opts.checkpoint_path.empty())
    ck.open(opts.checkpoint_path, std::ios::app);
  {
    std::unique_lock<std::mutex> lk(mu);
    for (u64 i = 0; i < nchunks; i++) {
      cv.wait(lk, [&] { return have[i] == 1; });
      if (skip[i]) continue;
      const ChunkResult& r = results[i];
      s.candidates += r.candidates;
      s.primes_tested += r.primes;
      s.passing += r.passing;
      s.non_passing += r.non_passing;
      for (const auto& f : r.failures) s.failures.push_back(f);
      if (ck.is_open()) {
        u64 a = lo + i * chunk, b = std::min(hi, a + chunk);
        ck << k << ' ' << a << ' ' << b << ' ' << r.non_passing << '\n';
        ck.flush();
      }
    }
  }
  for (auto& th : pool) th.join();
  return s;
}

u64 thaine_eta(int k, u64 q) {
  if (k < 3 || k > 16) throw domain_error("thaine_eta: k out of range");
  u64 f = 1ull << k;
  if (!is_prime_u64(q) || q % f != 1) throw domain_error("thaine_eta: q must be prime, 1 mod 2^k");
  for (u64 eta = 2; eta < q; eta++) {
    if (powmod(eta, f, q) == 1 && powmod(eta, f / 2, q) != 1) return eta;
  }
  throw integrity_error("thaine_eta: no element of order 2^k");
}

std::vector<mpz_class> thaine_coefficients(int k, u64 q) {
  u64 eta = thaine_eta(k, q);
  u64 f = 1ull << k;
  std::vector<mpz_class> out;
  u64 pw = powmod(eta, 1, q);
  u64 eta2 = mulmod(eta, eta, q);
  for (u64 a = 1; a < f; a += 2) {
    // floor(a * (eta^a mod q) / q), eta^a reduced first
    u128 prod = (u128)a * pw;
    out.emplace_back(static_cast<u64>(prod / q));
    pw = mulmod(pw, eta2, q);
  }
  return out;
}

bool thaine_check(int k, u64 q1, u64 q2, u64 j, u64 ell) {
  if (q1 == q2) throw domain_error("thaine_check: q1 and q2 must differ");
  if (!is_prime_u64(ell) || ell < 3) throw domain_error("thaine_check: ell must be an odd prime");
  TowerLevel t = tower_level(k);
  auto projection = [&](u64 q) {
    std::vector<mpz_class> cs = thaine_coefficients(k, q);
    CycInt P(t.m);
    std::size_t idx = 0;
    for (u64 a = 1; a < t.f; a += 2, idx++) {
      CharValue v = char_eval(k, j, 1, a);
      cyc_add_root(P, (t.m - v.e) % t.m, cs[idx]);
    }
    return P;
  };
  CycInt P1 = projection(q1), P2 = projection(q2);
  U64Mod m{ell};
  PolyOps<U64Mod> P{m};
  auto p1 = P.from_mpz(P1.c), p2 = P.from_mpz(P2.c);
  std::vector<u64> phi(t.m / 2 + 1, 0);
  phi[0] = 1;
  phi[t.m / 2] = 1;
  auto g = P.gcd(P.gcd(p1, p2), phi);
  return g.size() == 1;
}

}  // namespace weber
