#pragma once
// Primality testing. Below 2^64 the Miller-Rabin witness set
// {2,...,37} is deterministic (Sorenson-Webster); above, we run 64
// fixed-seed rounds and report "probable prime".

#include "weber/common.hpp"

namespace weber {

inline bool miller_rabin_u64(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int r = v2_u64(d);
  d >>= r;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; i++) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_u64(n, a)) return false;
  }
  return true;
}

// Strong probable-prime test for arbitrary precision. rounds fixed-seed
// MR rounds; deterministic for a given seed. Exact (via is_prime_u64)
// when n fits in 64 bits.
inline bool is_probable_prime(const mpz_class& n, int rounds = 64, u64 seed = 0x5eedULL) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  mpz_class d = n - 1;
  unsigned long r = v2_mpz(d);
  d >>= r;
  fixed_rng rng(seed);
  mpz_class a, x, nm1 = n - 1;
  for (int i = 0; i < rounds; i++) {
    // witness in [2, n-2]; n > 2^64 so a 64-bit draw is always in range
    a = mpz_class(2 + rng.below(~0ull - 4));
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned long j = 1; j < r; j++) {
      x = x * x % n;
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace weber
