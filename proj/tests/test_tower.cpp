#include <doctest.h>

#include <numeric>
#include <set>

#include "weber/tower.hpp"

using namespace weber;

TEST_CASE("tower level parameters") {
  for (int k = 3; k <= 12; k++) {
    TowerLevel t = tower_level(k);
    CHECK(t.k == k);
    CHECK(t.f == (1ull << k));
    CHECK(t.n == t.f / 4);
    CHECK(t.m == t.n);
  }
  CHECK_THROWS_AS(tower_level(2), domain_error);
  CHECK_THROWS_AS(tower_level(31), domain_error);
}

TEST_CASE("two-adic decomposition: fixtures") {
  TwoAdicDecomp d = two_adic_decompose(5, 4);
  CHECK(d.eps == 0);
  CHECK(d.s == 1);
  d = two_adic_decompose(15, 4);
  CHECK(d.eps == 1);
  CHECK(d.s == 0);
  d = two_adic_decompose(7, 4);
  CHECK(d.eps == 1);
  CHECK(d.s == 2);
  CHECK_THROWS_AS(two_adic_decompose(4, 4), domain_error);
}

TEST_CASE("two-adic decomposition: reconstruction and uniqueness") {
  for (int k = 3; k <= 8; k++) {
    u64 f = 1ull << k, m = f / 4;
    std::set<std::pair<int, u64>> seen;
    for (u64 a = 1; a < f; a += 2) {
      TwoAdicDecomp d = two_adic_decompose(a, k);
      CHECK(d.s < m);
      u64 v = powmod(5 % f, d.s, f);
      if (d.eps) v = f - v;
      CHECK(v % f == a);
      seen.insert({d.eps, d.s});
    }
    CHECK(seen.size() == f / 2);  // bijection onto {0,1} x Z/m
  }
}

TEST_CASE("characters: multiplicativity") {
  int k = 5;
  TowerLevel t = tower_level(k);
  fixed_rng rng(42);
  for (int trial = 0; trial < 200; trial++) {
    u64 a = 2 * rng.below(t.f / 2) + 1;
    u64 b = 2 * rng.below(t.f / 2) + 1;
    u64 j = rng.below(t.m);
    int delta = static_cast<int>(rng.below(2));
    CharValue va = char_eval(k, j, delta, a);
    CharValue vb = char_eval(k, j, delta, b);
    CharValue vab = char_eval(k, j, delta, (a * b) % t.f);
    CHECK(!va.zero);
    CHECK(vab.e == (va.e + vb.e) % t.m);
  }
  CHECK(char_eval(k, 1, 1, 8).zero);  // even argument
}

TEST_CASE("characters: 1 + 2^(k-1) detects faithfulness") {
  // chi_{j,delta}(1 + 2^(k-1)) = (-1)^j, so odd-j characters are
  // nontrivial on the deepest layer of the 2-adic filtration
  for (int k = 4; k <= 8; k++) {
    TowerLevel t = tower_level(k);
    u64 a = 1 + t.f / 2;
    for (u64 j : {u64(1), u64(3), t.m - 1}) {
      CharValue v = char_eval(k, j, 1, a);
      CHECK(v.e == t.m / 2);
    }
    CHECK(char_eval(k, 2, 1, a).e == 0);
  }
}

TEST_CASE("characters: order and conductor") {
  int k = 5;
  TowerLevel t = tower_level(k);
  CHECK(char_order(k, 0, 0) == 1);
  CHECK(char_order(k, 0, 1) == 2);
  CHECK(char_order(k, 1, 1) == t.m);
  CHECK(char_order(k, 2, 0) == t.m / 2);
  CHECK(char_conductor(k, 0, 0) == 1);
  CHECK(char_conductor(k, 1, 1) == t.f);
  CHECK(char_conductor(k, t.m / 2, 0) == 8);  // order-2 even character

  std::vector<u64> full = full_order_indices(k);
  CHECK(full.size() == t.m / 2);  // the odd j
  for (u64 j : full) {
    CHECK(j % 2 == 1);
    CHECK(char_order(k, j, 1) == t.m);
  }
}

TEST_CASE("group ring: idempotents over F_ell") {
  struct Case {
    u64 n, ell;
  };
  for (Case c : {Case{4, 5}, Case{8, 17}, Case{16, 17}}) {
    std::vector<GroupRingElt> es;
    GroupRingElt sum = gr_zero(c.n, c.ell);
    for (u64 j = 0; j < c.n; j++) {
      GroupRingElt e = idempotent(j, c.n, c.ell);
      CHECK(gr_eq(gr_mul(e, e), e));
      sum = gr_add(sum, e);
      for (const GroupRingElt& prev : es) CHECK(gr_eq(gr_mul(e, prev), gr_zero(c.n, c.ell)));
      es.push_back(e);
    }
    CHECK(gr_eq(sum, gr_one(c.n, c.ell)));
  }
  CHECK_THROWS_AS(idempotent(1, 8, 5), domain_error);  // 5 != 1 mod 8
}

TEST_CASE("group ring: norm element acts by parity") {
  for (u64 j = 0; j < 8; j++) {
    u64 v = norm_element_action(j, 8, 17);
    CHECK(v == (j % 2 == 0 ? 2u : 0u));
  }
}

TEST_CASE("discriminant and Minkowski bound") {
  CHECK(discriminant_log2(3) == 3);
  CHECK(discriminant_log2(4) == 11);
  CHECK(discriminant_log2(10) == 2303);
  CHECK(discriminant_log2(12) == 11263);
  double mb3 = minkowski_bound_log10(3);
  CHECK(mb3 == doctest::Approx(0.150515).epsilon(1e-4));
  // bound grows monotonically up the tower
  for (int k = 4; k <= 12; k++) CHECK(minkowski_bound_log10(k) > minkowski_bound_log10(k - 1));
}
