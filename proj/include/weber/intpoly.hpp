#pragma once
// Dense univariate polynomials over Z: resultants (modular CRT with a
// subresultant cross-check), the tower minimal polynomials g_k, the
// Chebyshev-like unit polynomials V_a, and a division-free charpoly.

#include <vector>

#include <gmpxx.h>

#include "weber/common.hpp"

namespace weber {

// coefficients ascending; invariant: empty or nonzero leading coeff
struct IntPoly {
  std::vector<mpz_class> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  // degree of the zero polynomial is -1 by convention
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const mpz_class& lc() const { return c.back(); }
  mpz_class eval(const mpz_class& x) const;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);
// remainder of a by monic b (exact over Z)
IntPoly poly_mod_monic(const IntPoly& a, const IntPoly& b);
// substitute x <- x^2 - 2
IntPoly poly_compose_x2m2(const IntPoly& a);
bool poly_eq(const IntPoly& a, const IntPoly& b);

// Res(a, b) by Euclid modulo 62-bit primes + CRT, certified by a
// Hadamard-style bound on |Res|.
mpz_class resultant_crt(const IntPoly& a, const IntPoly& b);
// Res(a, b) by the subresultant PRS over Z; slower, used as oracle.
mpz_class resultant_subresultant(const IntPoly& a, const IntPoly& b);
// dispatch: CRT path, with the PRS cross-check at small degrees
mpz_class resultant(const IntPoly& a, const IntPoly& b);

// minimal polynomial g_k of zeta_{2^k}+zeta_{2^k}^{-1} over Q:
// g_3 = x^2 - 2, g_{k+1}(x) = g_k(x^2 - 2); monic, degree 2^(k-2)
IntPoly minimal_polynomial(int k);

// V_a: V_1 = 1, V_2 = x, V_{a+1} = x V_a - V_{a-1}; V_a(zeta+1/zeta) =
// (zeta^a - zeta^-a)/(zeta - 1/zeta). Reduced mod g_k; this represents
// the cyclotomic unit xi_a = (zeta^a - zeta^-a)/(zeta - zeta^-1).
IntPoly cyclotomic_unit(int k, u64 a);

// Res(g_k, V_a mod g_k); +-1 exactly when xi_a is a unit
mpz_class unit_norm(int k, u64 a);

// characteristic polynomial det(xI - M) by Berkowitz (division-free),
// coefficients ascending
std::vector<mpz_class> charpoly_berkowitz(const std::vector<std::vector<mpz_class>>& M);

// given p with all roots real: true iff all roots are >= 0
// (coefficient signs of a product of (x - r_i), r_i >= 0, alternate)
bool all_real_roots_nonneg(const std::vector<mpz_class>& p);

}  // namespace weber
