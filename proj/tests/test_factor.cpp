#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "weber/candidates.hpp"
#include "weber/factorization.hpp"
#include "weber/primes.hpp"

using namespace weber;

TEST_CASE("u64 primality against trial division") {
  auto naive = [](u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; d++)
      if (n % d == 0) return false;
    return true;
  };
  for (u64 n = 0; n < 2000; n++) CHECK(is_prime_u64(n) == naive(n));
  CHECK(!is_prime_u64(561));              // Carmichael
  CHECK(is_prime_u64((1ull << 61) - 1));  // Mersenne prime
  CHECK(is_probable_prime(mpz_class("7830753969553468937988617089")));
  CHECK(!is_probable_prime(mpz_class("7830753969553468937988617089") * 76532353));
}

TEST_CASE("pollard rho finds a factor of a semiprime") {
  mpz_class n = mpz_class(1000003) * 1000033;
  mpz_class d = pollard_brent(n, 1, 1u << 20);
  CHECK(d > 1);
  CHECK(d < n);
  CHECK(n % d == 0);
}

TEST_CASE("factor: fixtures") {
  FactorizationResult r = factor(mpz_class(2176));
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].prime == 2);
  CHECK(r.factors[0].exponent == 7);
  CHECK(r.factors[0].method == "trial");
  CHECK(r.factors[1].prime == 17);
  CHECK(r.factors[1].exponent == 1);
  CHECK(r.complete());
  CHECK(factorization_consistent(r));

  r = factor(mpz_class(692092928));
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].prime == 2);
  CHECK(r.factors[0].exponent == 15);
  CHECK(r.factors[1].prime == 21121);
  CHECK(factorization_consistent(r));

  r = factor(mpz_class("62497959395555088007168"));
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].exponent == 31);
  CHECK(r.factors[1].prime == mpz_class("29102880226241"));
  CHECK(factorization_consistent(r));
}

TEST_CASE("factor: rho splits the level-9 odd part") {
  mpz_class odd("599306027054017337136679953037180417");
  FactorizationResult r = factor(odd);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].prime == 76532353);
  CHECK(r.factors[1].prime == mpz_class("7830753969553468937988617089"));
  CHECK(r.factors[0].method == "rho");
  CHECK(r.complete());
  CHECK(factorization_consistent(r));
}

TEST_CASE("factor: exhausted budget leaves a certified-composite cofactor") {
  // product of two Mersenne primes, far beyond a crippled rho budget
  mpz_class p = (mpz_class(1) << 89) - 1;
  mpz_class q = (mpz_class(1) << 107) - 1;
  FactorBudget tiny;
  tiny.trial_bound = 100;
  tiny.rho_iterations = 50;
  tiny.rho_restarts = 2;
  FactorizationResult r = factor(p * q * 8, tiny);
  CHECK(!r.complete());
  CHECK(r.unresolved_cofactor == p * q);
  CHECK(!is_probable_prime(r.unresolved_cofactor));
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].prime == 2);
  CHECK(r.factors[0].exponent == 3);
  CHECK(factorization_consistent(r));
}

TEST_CASE("factor: deterministic, ascending, fully tagged") {
  mpz_class n = mpz_class(1299709) * 15485863 * 32452843;
  FactorizationResult a = factor(n);
  FactorizationResult b = factor(n);
  REQUIRE(a.factors.size() == 3);
  CHECK(a.factors[0].prime == 1299709);
  CHECK(a.factors[1].prime == 15485863);
  CHECK(a.factors[2].prime == 32452843);
  REQUIRE(a.factors.size() == b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); i++) {
    CHECK(a.factors[i].prime == b.factors[i].prime);
    CHECK(a.factors[i].method == b.factors[i].method);
    CHECK((a.factors[i].method == "trial" || a.factors[i].method == "rho"));
  }
  CHECK(a.unresolved_cofactor == b.unresolved_cofactor);
}

TEST_CASE("factor: external backend is used and cross-checked") {
  u64 p = 1000003, q = 1000033;
  REQUIRE(is_prime_u64(p));
  REQUIRE(is_prime_u64(q));
  mpz_class n = mpz_class(p) * q;
  std::string script = "/tmp/weber_test_backend.sh";
  {
    std::ofstream s(script);
    s << "#!/bin/sh\nread x\necho " << p << "\necho " << q << "\n";
  }
  REQUIRE(std::system(("chmod +x " + script).c_str()) == 0);
  FactorBudget b;
  b.trial_bound = 10;  // keep trial division away from the answer
  b.backend = script;
  FactorizationResult r = factor(n, b);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].prime == p);
  CHECK(r.factors[0].method == "external");
  CHECK(r.factors[1].prime == q);
  CHECK(r.complete());
  std::remove(script.c_str());
}

TEST_CASE("factor: lying backend is ignored, internal path recovers") {
  u64 p = 1000003, q = 1000033;
  mpz_class n = mpz_class(p) * q;
  std::string script = "/tmp/weber_test_backend_bad.sh";
  {
    std::ofstream s(script);
    s << "#!/bin/sh\necho 91\n";  // 91 = 7*13: not prime, not a divisor
  }
  REQUIRE(std::system(("chmod +x " + script).c_str()) == 0);
  FactorBudget b;
  b.trial_bound = 10;
  b.backend = script;
  FactorizationResult r = factor(n, b);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].prime == p);
  CHECK(r.factors[0].method == "rho");
  CHECK(r.factors[1].prime == q);
  std::remove(script.c_str());
}

TEST_CASE("candidate filter: reason priority and survivors") {
  mpz_class thr(1000000000);
  // congruence is checked before the size threshold
  CHECK(filter_reason(mpz_class(11), 4, thr) == "congruence-failed");
  CHECK(filter_reason(mpz_class(2), 9, thr) == "congruence-failed");
  CHECK(filter_reason(mpz_class(17), 4, thr) == "below-10^9-sieved");
  CHECK(filter_reason(mpz_class(17), 4, mpz_class(10)).empty());  // survivor
  // ell = -1 mod 2^(k-1) is admissible too
  CHECK(filter_reason(mpz_class(31), 5, mpz_class(10)).empty());
  CHECK(filter_reason(mpz_class("7830753969553468937988617089"), 9, thr) == "congruence-failed");
}

TEST_CASE("candidate assembly: partition of the prime factors") {
  CandidateSet cs = assemble_candidates(6, mpz_class(2176), FactorBudget{});
  CHECK(cs.survivors.empty());
  REQUIRE(cs.filtered.size() == 2);
  CHECK(cs.filtered[0].prime == 2);
  CHECK(cs.filtered[0].reason == "congruence-failed");
  CHECK(cs.filtered[1].prime == 17);
  CHECK(cs.filtered[1].reason == "congruence-failed");  // 17 = 17 mod 32

  CandidateSet low = assemble_candidates(4, mpz_class(2176), FactorBudget{}, mpz_class(10));
  REQUIRE(low.survivors.size() == 1);
  CHECK(low.survivors[0] == 17);
}
