#pragma once
// Negacyclic convolution (Z[x]/(x^N + 1), N a power of two) for big
// integer coefficient vectors, via NTTs modulo a few 62-bit primes of
// the form c*2^57 + 1 and CRT reconstruction into the symmetric range.

#include <vector>

#include <gmpxx.h>

#include "weber/common.hpp"

namespace weber {

// primes p = c*2^57+1 (so 2N | p-1 for any N <= 2^56) with known
// primitive roots; generated and cached on first use
struct NttPrime {
  u64 p;
  u64 g;  // primitive root mod p
};

const std::vector<NttPrime>& ntt_primes(std::size_t count);

// cyclic NTT in place, length a power of two dividing 2^57
void ntt_forward(std::vector<u64>& a, u64 p, u64 root);
void ntt_inverse(std::vector<u64>& a, u64 p, u64 root);

// negacyclic convolution of two length-N u64 vectors mod p
std::vector<u64> negacyclic_mod_p(const std::vector<u64>& a, const std::vector<u64>& b, u64 p, u64 g);

// negacyclic convolution over Z, exact; chooses the CRT prime count
// from the coefficient bound N*max|a|*max|b|
std::vector<mpz_class> negacyclic_convolve(const std::vector<mpz_class>& a,
                                           const std::vector<mpz_class>& b);

// reference O(N^2) implementation, used below the NTT cutoff and as
// the cross-check oracle in tests
std::vector<mpz_class> negacyclic_schoolbook(const std::vector<mpz_class>& a,
                                             const std::vector<mpz_class>& b);

}  // namespace weber
