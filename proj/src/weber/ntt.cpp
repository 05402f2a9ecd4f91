#include "weber/ntt.hpp"

#include <mutex>

#include "weber/primes.hpp"

namespace weber {

namespace {

// trial-divide c < 2^17, so factoring p-1 = c*2^45 is immediate
std::vector<u64> prime_factors_small(u64 c) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= c; d++) {
    if (c % d == 0) {
      fs.push_back(d);
      while (c % d == 0) c /= d;
    }
  }
  if (c > 1) fs.push_back(c);
  return fs;
}

u64 find_primitive_root(u64 p, u64 c) {
  std::vector<u64> qs = prime_factors_small(c);
  qs.push_back(2);
  for (u64 g = 2; g < p; g++) {
    bool ok = true;
    for (u64 q : qs) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw integrity_error("ntt: no primitive root");
}

}  // namespace

const std::vector<NttPrime>& ntt_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<NttPrime> cache;
  std::lock_guard<std::mutex> lock(mu);
  u64 c = cache.empty() ? (1ull << 17) + 1 : (cache.back().p - 1) >> 45;
  while (cache.size() < count) {
    // descend odd c: p just under 2^62, headroom for u128 products
    while (true) {
      c -= 2;
      if (c == 1) throw integrity_error("ntt: prime list exhausted");
      u64 p = (c << 45) + 1;
      if (is_prime_u64(p)) {
        cache.push_back({p, find_primitive_root(p, c)});
        break;
      }
    }
  }
  return cache;
}

void ntt_forward(std::vector<u64>& a, u64 p, u64 root) {
  std::size_t n = a.size();
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; i++) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    u64 wl = powmod(root, (p - 1) / len, p);
    for (std::size_t i = 0; i < n; i += len) {
      u64 w = 1;
      for (std::size_t k = 0; k < len / 2; k++) {
        u64 u = a[i + k];
        u64 v = mulmod(a[i + k + len / 2], w, p);
        a[i + k] = u + v < p ? u + v : u + v - p;
        a[i + k + len / 2] = u >= v ? u - v : u + p - v;
        w = mulmod(w, wl, p);
      }
    }
  }
}

void ntt_inverse(std::vector<u64>& a, u64 p, u64 root) {
  u64 inv_root = powmod(root, p - 2, p);
  ntt_forward(a, p, inv_root);
  u64 ninv = powmod(a.size() % p, p - 2, p);
  for (u64& x : a) x = mulmod(x, ninv, p);
}

std::vector<u64> negacyclic_mod_p(const std::vector<u64>& a, const std::vector<u64>& b, u64 p, u64 g) {
  std::size_t n = a.size();
  if (b.size() != n || (n & (n - 1)) != 0) throw domain_error("negacyclic: bad lengths");
  // weight by psi^i (psi a primitive 2n-th root) turns negacyclic into cyclic
  u64 psi = powmod(g, (p - 1) / (2 * n), p);
  std::vector<u64> fa(n), fb(n);
  u64 w = 1;
  for (std::size_t i = 0; i < n; i++) {
    fa[i] = mulmod(a[i] % p, w, p);
    fb[i] = mulmod(b[i] % p, w, p);
    w = mulmod(w, psi, p);
  }
  ntt_forward(fa, p, g);
  ntt_forward(fb, p, g);
  for (std::size_t i = 0; i < n; i++) fa[i] = mulmod(fa[i], fb[i], p);
  ntt_inverse(fa, p, g);
  u64 psi_inv = powmod(psi, p - 2, p);
  w = 1;
  for (std::size_t i = 0; i < n; i++) {
    fa[i] = mulmod(fa[i], w, p);
    w = mulmod(w, psi_inv, p);
  }
  return fa;
}

std::vector<mpz_class> negacyclic_schoolbook(const std::vector<mpz_class>& a,
                                             const std::vector<mpz_class>& b) {
  std::size_t n = a.size();
  if (b.size() != n) throw domain_error("negacyclic: bad lengths");
  std::vector<mpz_class> r(n, mpz_class(0));
  for (std::size_t i = 0; i < n; i++) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; j++) {
      if (i + j < n)
        r[i + j] += a[i] * b[j];
      else
        r[i + j - n] -= a[i] * b[j];
    }
  }
  return r;
}

std::vector<mpz_class> negacyclic_convolve(const std::vector<mpz_class>& a,
                                           const std::vector<mpz_class>& b) {
  std::size_t n = a.size();
  if (b.size() != n || n == 0 || (n & (n - 1)) != 0) throw domain_error("negacyclic: bad lengths");
  if (n < 64) return negacyclic_schoolbook(a, b);
  mpz_class ma = 0, mb = 0;
  for (const auto& x : a) if (mpz_class t = abs(x); t > ma) ma = t;
  for (const auto& x : b) if (mpz_class t = abs(x); t > mb) mb = t;
  mpz_class bound = 2 * mpz_class(n) * ma * mb + 1;  // symmetric range
  std::size_t t = 1;
  {
    mpz_class prod = ntt_primes(1)[0].p;
    while (prod < bound) {
      t++;
      prod *= ntt_primes(t)[t - 1].p;
    }
  }
  const auto& ps = ntt_primes(t);
  std::vector<std::vector<u64>> residues(t);
  for (std::size_t pi = 0; pi < t; pi++) {
    u64 p = ps[pi].p;
    std::vector<u64> ra(n), rb(n);
    for (std::size_t i = 0; i < n; i++) {
      ra[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
      rb[i] = mpz_fdiv_ui(b[i].get_mpz_t(), p);
    }
    residues[pi] = negacyclic_mod_p(ra, rb, p, ps[pi].g);
  }
  // CRT per coefficient, lifted into (-P/2, P/2]
  std::vector<mpz_class> out(n);
  mpz_class P = 1;
  for (std::size_t pi = 0; pi < t; pi++) P *= ps[pi].p;
  std::vector<mpz_class> basis(t);  // (P/p) * ((P/p)^-1 mod p)
  for (std::size_t pi = 0; pi < t; pi++) {
    mpz_class q = P / ps[pi].p;
    mpz_class qi;
    mpz_class pz = ps[pi].p;
    if (mpz_invert(qi.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw integrity_error("crt: non-invertible");
    basis[pi] = q * qi;
  }
  mpz_class half = P / 2;
  for (std::size_t i = 0; i < n; i++) {
    mpz_class v = 0;
    for (std::size_t pi = 0; pi < t; pi++) v += basis[pi] * residues[pi][i];
    v %= P;
    if (v < 0) v += P;
    if (v > half) v -= P;
    out[i] = v;
  }
  return out;
}

}  // namespace weber
