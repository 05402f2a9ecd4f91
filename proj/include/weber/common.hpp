#pragma once
// Shared small utilities: checked integer helpers, 64-bit modular
// arithmetic, FNV-1a digests, deterministic RNG.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace weber {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Raised when two independent computations of the same quantity disagree.
// Callers must not catch this; it indicates a bug, not bad input.
struct integrity_error : std::logic_error {
  explicit integrity_error(const std::string& what) : std::logic_error(what) {}
};

// Raised for unsupported or out-of-contract inputs.
struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((u128)a * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = m == 1 ? 0 : 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// 2-adic valuation; v2(0) is undefined.
inline int v2_u64(u64 x) {
  if (x == 0) throw domain_error("v2(0) undefined");
  return __builtin_ctzll(x);
}

inline unsigned long v2_mpz(const mpz_class& x) {
  if (x == 0) throw domain_error("v2(0) undefined");
  return mpz_scan1(x.get_mpz_t(), 0);
}

inline std::size_t digits10(const mpz_class& x) {
  if (x == 0) return 1;
  mpz_class a = abs(x);
  return a.get_str().size();
}

// FNV-1a 64-bit, used as a cheap content digest in certificates.
// Not cryptographic: detects accidental corruption, not tampering.
inline u64 fnv1a(const void* data, std::size_t n, u64 h = 0xcbf29ce484222325ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; i++) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline u64 fnv1a_str(const std::string& s, u64 h = 0xcbf29ce484222325ull) {
  return fnv1a(s.data(), s.size(), h);
}

/// splitmix64: tiny deterministic generator for Pollard rho restarts and
// Cantor-Zassenhaus splitting. Seed is recorded in certificates.
struct fixed_rng {
  u64 state;
  explicit fixed_rng(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound)
  u64 below(u64 bound) { return bound ? next() % bound : 0; }
};

inline std::string hex64(u64 v) {
  static const char* d = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; i--) {
    s[static_cast<std::size_t>(i)] = d[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace weber
