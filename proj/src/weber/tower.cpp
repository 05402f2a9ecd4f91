#include "weber/tower.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "weber/primes.hpp"

namespace weber {

TowerLevel tower_level(int k) {
  if (k < 3 || k > 30) throw domain_error("tower_level: k out of range");
  TowerLevel t;
  t.k = k;
  t.n = 1ull << (k - 2);
  t.f = 1ull << k;
  t.m = t.n;
  return t;
}

namespace {

// s with 5^s = b (mod 2^k), b = 1 (mod 4), by lifting one exponent bit
// per modulus bit: 5^(2^i) = 1 + 2^(i+2) (mod 2^(i+3)).
u64 dlog5_lift(u64 b, int k) {
  u64 mask = (k == 64) ? ~0ull : (1ull << k) - 1;
  u64 s = 0, cur = 1;
  u64 pw = 5;  // 5^(2^i) mod 2^k
  for (int i = 0; i <= k - 3; i++) {
    u64 mod_hi = (1ull << (i + 3)) - 1;
    if (((cur ^ b) & mod_hi) != 0) {
      s |= 1ull << i;
      cur = (u128)cur * pw & mask;
    }
    pw = (u128)pw * pw & mask;
  }
  return s;
}

// table of 5^s mod 2^k -> s, built lazily per k
const std::unordered_map<u64, u64>& dlog5_table(int k) {
  static std::mutex mu;
  static std::unordered_map<int, std::unordered_map<u64, u64>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(k);
  if (it == tables.end()) {
    std::unordered_map<u64, u64> t;
    u64 mask = (1ull << k) - 1;
    u64 n = 1ull << (k - 2);
    u64 p = 1;
    for (u64 s = 0; s < n; s++) {
      t.emplace(p, s);
      p = (u128)p * 5 & mask;
    }
    if (p != 1) throw integrity_error("dlog5_table: order of 5 wrong");
    it = tables.emplace(k, std::move(t)).first;
  }
  return it->second;
}

}  // namespace

TwoAdicDecomp two_adic_decompose(u64 a, int k) {
  if (k < 3 || k > 16) throw domain_error("two_adic_decompose: k out of range");
  u64 f = 1ull << k;
  a &= f - 1;
  if ((a & 1) == 0) throw domain_error("two_adic_decompose: a must be odd");
  // -5^s = 3 (mod 4), 5^s = 1 (mod 4): a mod 4 picks eps
  int eps = (a & 3) == 3 ? 1 : 0;
  u64 b = eps ? (f - a) & (f - 1) : a;
  auto it = dlog5_table(k).find(b);
  if (it == dlog5_table(k).end()) throw integrity_error("dlog5: not in <5>");
  u64 s = it->second;
  if (dlog5_lift(b, k) != s) throw integrity_error("dlog5: lift/table mismatch");
  return {eps, s};
}

CharValue char_eval(int k, u64 j, int delta, u64 a) {
  TowerLevel t = tower_level(k);
  a &= t.f - 1;
  if ((a & 1) == 0) return {true, 0};
  TwoAdicDecomp d = two_adic_decompose(a, k);
  u64 e = (j % t.m) * d.s % t.m;
  if (delta & d.eps) e = (e + t.m / 2) % t.m;
  return {false, e};
}

u64 char_order(int k, u64 j, int delta) {
  TowerLevel t = tower_level(k);
  j %= t.m;
  // (Z/2^k)* ~ Z/2 x Z/m via (eps, s); order = lcm of the two parts,
  // and both are powers of two
  u64 oj = j == 0 ? 1 : t.m / std::gcd(t.m, j);
  return delta ? std::max<u64>(oj, 2) : oj;
}

u64 char_conductor(int k, u64 j, int delta) {
  TowerLevel t = tower_level(k);
  j %= t.m;
  if (j == 0 && delta == 0) return 1;
  // smallest 2^c such that chi is trivial on every a = 1 (mod 2^c)
  for (int c = 2; c <= k; c++) {
    bool trivial = true;
    for (u64 a = 1 + (1ull << c); a < t.f && trivial; a += (1ull << c)) {
      CharValue v = char_eval(k, j, delta, a);
      if (!v.zero && v.e != 0) trivial = false;
    }
    if (trivial) return 1ull << c;
  }
  return t.f;
}

std::vector<u64> full_order_indices(int k) {
  TowerLevel t = tower_level(k);
  std::vector<u64> out;
  for (u64 j = 1; j < t.m; j += 2) out.push_back(j);
  return out;
}

GroupRingElt gr_zero(u64 n, u64 ell) { return {ell, std::vector<u64>(n, 0)}; }

GroupRingElt gr_one(u64 n, u64 ell) {
  GroupRingElt e = gr_zero(n, ell);
  e.c[0] = 1 % ell;
  return e;
}

GroupRingElt gr_add(const GroupRingElt& a, const GroupRingElt& b) {
  if (a.ell != b.ell || a.c.size() != b.c.size()) throw domain_error("gr_add: mixed rings");
  GroupRingElt r = a;
  for (std::size_t i = 0; i < r.c.size(); i++) {
    r.c[i] += b.c[i];
    if (r.c[i] >= a.ell) r.c[i] -= a.ell;
  }
  return r;
}

GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b) {
  if (a.ell != b.ell || a.c.size() != b.c.size()) throw domain_error("gr_mul: mixed rings");
  std::size_t n = a.c.size();
  GroupRingElt r = gr_zero(n, a.ell);
  for (std::size_t i = 0; i < n; i++) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < n; j++) {
      std::size_t t = i + j < n ? i + j : i + j - n;
      r.c[t] = (r.c[t] + (u128)a.c[i] * b.c[j]) % a.ell;
    }
  }
  return r;
}

bool gr_eq(const GroupRingElt& a, const GroupRingElt& b) {
  return a.ell == b.ell && a.c == b.c;
}

u64 primitive_root_of_unity(u64 n, u64 ell) {
  if (ell < 3 || !is_prime_u64(ell)) throw domain_error("embedding: ell must be prime");
  if ((ell - 1) % n != 0) throw domain_error("unsupported embedding: ell != 1 (mod n)");
  for (u64 w = 2; w < ell; w++) {
    if (powmod(w, n, ell) != 1) continue;
    if (n >= 2 && powmod(w, n / 2, ell) == 1) continue;
    return w;
  }
  throw integrity_error("primitive_root_of_unity: none found");
}

GroupRingElt idempotent(u64 j, u64 n, u64 ell) {
  u64 w = primitive_root_of_unity(n, ell);
  u64 ninv = powmod(n % ell, ell - 2, ell);
  GroupRingElt e = gr_zero(n, ell);
  for (u64 i = 0; i < n; i++) {
    // chi_j(sigma^i)^{-1} = w^{-j i}
    u64 v = powmod(w, (n - j % n) * i % n, ell);
    e.c[i] = mulmod(ninv, v, ell);
  }
  return e;
}

u64 norm_element_action(u64 j, u64 n, u64 ell) {
  u64 w = primitive_root_of_unity(n, ell);
  u64 s = powmod(w, (j % n) * (n / 2) % n, ell);  // chi_j(sigma^(n/2))
  u64 r = (1 + s) % ell;
  u64 expect = (j % n) % 2 == 0 ? 2 % ell : 0;
  if (r != expect) throw integrity_error("norm_element_action: spectral value mismatch");
  return r;
}

u64 discriminant_log2(int k) {
  tower_level(k);
  return (u64)(k - 1) * (1ull << (k - 2)) - 1;
}

double minkowski_bound_log10(int k) {
  TowerLevel t = tower_level(k);
  double N = static_cast<double>(t.n);
  // log(N!/N^N) + (1/2) log sqrt disc, all in base 10
  double ln = std::lgamma(N + 1.0) - N * std::log(N);
  return ln / std::log(10.0) + 0.5 * static_cast<double>(discriminant_log2(k)) * std::log10(2.0);
}

}  // namespace weber
