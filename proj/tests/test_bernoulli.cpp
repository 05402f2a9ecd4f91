#include <doctest.h>

#include "weber/bernoulli.hpp"

using namespace weber;

// Norms |Nm(2^k B_1,psi)| / 2^(k m/2) for psi = psi_1, frozen from
// independent recomputation (conjugate products for k <= 6, plus the
// direct conductor sum in exact rational arithmetic).
static const char* kFrozenNorms[] = {
    /* k=3 */ "1",
    /* k=4 */ "2",
    /* k=5 */ "8",
    /* k=6 */ "2176",
    /* k=7 */ "692092928",
    /* k=8 */ "62497959395555088007168",
    /* k=9 */ "5527622451448555262320005717721937139739376956982951936",
};

TEST_CASE("scaled Bernoulli element: k=3 by hand") {
  // S(psi_1) = 1 + 3 - 5 - 7 = -8 in Z[zeta_2] = Z
  ScaledBernoulli sb = compute_bernoulli(3, 1, 1);
  CHECK(sb.scaled.m == 2);
  CHECK(sb.scaled.c[0] == -8);
  CHECK(bernoulli_norm(3, 1) == 1);
}

TEST_CASE("trivial character: S = 4^(k-1)") {
  for (int k = 3; k <= 7; k++) {
    ScaledBernoulli sb = compute_bernoulli(k, 0, 0);
    CHECK(cyc_is_constant(sb.scaled));
    mpz_class want;
    mpz_ui_pow_ui(want.get_mpz_t(), 4, static_cast<unsigned>(k - 1));
    CHECK(sb.scaled.c[0] == want);
  }
}

TEST_CASE("even nontrivial characters vanish") {
  for (int k = 3; k <= 6; k++) {
    u64 m = 1ull << (k - 2);
    for (u64 j = 1; j < m; j++) CHECK(cyc_is_zero(compute_bernoulli(k, j, 0).scaled));
  }
}

TEST_CASE("frozen norms k=3..9") {
  for (int k = 3; k <= 9; k++) {
    CHECK(bernoulli_norm(k, 1) == mpz_class(kFrozenNorms[k - 3]));
  }
}

TEST_CASE("norm rejects even character indices") {
  CHECK_THROWS_AS(bernoulli_norm(4, 2), domain_error);
}

TEST_CASE("norm is constant on the Galois orbit") {
  for (int k = 4; k <= 7; k++) CHECK(orbit_invariant(k));
}

TEST_CASE("second moment: exact rational value") {
  // sum over the m odd characters of |B_1,chi|^2 = (2^(2k-2) - 1)/12
  for (int k = 3; k <= 6; k++) {
    mpq_class want(mpz_class((mpz_class(1) << (2 * k - 2)) - 1), mpz_class(12));
    want.canonicalize();
    CHECK(second_moment_total(k) == want);
  }
}

TEST_CASE("per-character archimedean bound |B| <= 2^(k-2)") {
  for (int k = 3; k <= 6; k++) {
    u64 m = 1ull << (k - 2);
    for (u64 j = 1; j < m; j += 2) CHECK(abs_square_bounded(k, j));
  }
}

TEST_CASE("Stickelberger pairing matches B_1 on odd characters") {
  for (int k = 3; k <= 6; k++) {
    u64 m = 1ull << (k - 2);
    for (u64 j = 1; j < m; j += 2) CHECK(stickelberger_matches(k, j, 1));
  }
}

TEST_CASE("bound report: k=10 digit fixtures and ordering") {
  BoundReport b = bounds_report(10);
  CHECK(b.big_n == 128);
  CHECK(b.worst_digits == 309);
  CHECK(b.second_moment_digits == 143);
  CHECK(b.functional_digits == 213);
  for (int k = 4; k <= 12; k++) {
    BoundReport r = bounds_report(k);
    CHECK(r.second_moment_log10 <= r.functional_log10);
    CHECK(r.functional_log10 <= r.worst_log10);
    CHECK(r.second_moment_log10 <= r.second_moment_weak_log10);
  }
}

TEST_CASE("norms stay under the second-moment bound") {
  for (int k = 4; k <= 9; k++) {
    BoundReport b = bounds_report(k);
    CHECK(digits10(bernoulli_norm(k, 1)) <= b.second_moment_digits);
  }
}

TEST_CASE("high levels k=10..12: size properties") {
  // no frozen factorizations up here; the norms themselves are pinned
  // and must sit inside the second-moment envelope
  const std::size_t digits[] = {130, 297, 671};
  const std::size_t envelope[] = {143, 325, 726};
  for (int k = 10; k <= 12; k++) {
    mpz_class nrm = bernoulli_norm(k, 1);
    CHECK(digits10(nrm) == digits[k - 10]);
    CHECK(bounds_report(k).second_moment_digits == envelope[k - 10]);
    CHECK(digits10(nrm) <= envelope[k - 10]);
  }
}
