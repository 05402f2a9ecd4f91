#include "weber/cyclotomic.hpp"

#include <string>

#include "weber/ntt.hpp"

namespace weber {

namespace {
void check_same_ring(const CycInt& a, const CycInt& b) {
  if (a.m != b.m) throw domain_error("CycInt: mixed m");
}
}  // namespace

CycInt cyc_add(const CycInt& a, const CycInt& b) {
  check_same_ring(a, b);
  CycInt r = a;
  for (std::size_t i = 0; i < r.c.size(); i++) r.c[i] += b.c[i];
  return r;
}

CycInt cyc_sub(const CycInt& a, const CycInt& b) {
  check_same_ring(a, b);
  CycInt r = a;
  for (std::size_t i = 0; i < r.c.size(); i++) r.c[i] -= b.c[i];
  return r;
}

CycInt cyc_neg(const CycInt& a) {
  CycInt r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) {
  check_same_ring(a, b);
  CycInt r(a.m);
  r.c = negacyclic_convolve(a.c, b.c);
  return r;
}

bool cyc_eq(const CycInt& a, const CycInt& b) { return a.m == b.m && a.c == b.c; }

bool cyc_is_zero(const CycInt& a) {
  for (const auto& x : a.c)
    if (x != 0) return false;
  return true;
}

void cyc_add_root(CycInt& a, u64 e, const mpz_class& sign) {
  e %= a.m;
  if (e < a.m / 2)
    a.c[e] += sign;
  else
    a.c[e - a.m / 2] -= sign;
}

CycInt galois_apply(const CycInt& a, u64 t) {
  if ((t & 1) == 0) throw domain_error("galois_apply: t must be odd");
  CycInt r(a.m);
  for (std::size_t i = 0; i < a.c.size(); i++) {
    if (a.c[i] == 0) continue;
    cyc_add_root(r, i * t % a.m, a.c[i]);
  }
  return r;
}

CycInt cyc_conj(const CycInt& a) { return galois_apply(a, a.m - 1); }

bool cyc_is_constant(const CycInt& a) {
  for (std::size_t i = 1; i < a.c.size(); i++)
    if (a.c[i] != 0) return false;
  return true;
}

IntPoly cyc_to_poly(const CycInt& a) { return IntPoly(a.c); }

mpz_class field_norm(const CycInt& a) {
  std::vector<mpz_class> phi(a.m / 2 + 1, mpz_class(0));
  phi[0] = 1;
  phi[a.m / 2] = 1;
  return resultant(IntPoly(std::move(phi)), cyc_to_poly(a));
}

mpz_class field_norm_conjugates(const CycInt& a) {
  CycInt prod(a.m);
  prod.c[0] = 1;
  for (u64 t = 1; t < a.m; t += 2) prod = cyc_mul(prod, galois_apply(a, t));
  if (!cyc_is_constant(prod)) throw integrity_error("field_norm_conjugates: non-rational product");
  return prod.c[0];
}

bool totally_nonneg(const CycInt& a) {
  if (!cyc_eq(a, cyc_conj(a))) throw domain_error("totally_nonneg: element not real");
  std::size_t n = a.c.size();
  // multiplication-by-a matrix on the power basis; column j = a * zeta^j
  std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(n, mpz_class(0)));
  for (std::size_t j = 0; j < n; j++) {
    for (std::size_t i = 0; i < n; i++) {
      if (i + j < n)
        M[i + j][j] += a.c[i];
      else
        M[i + j - n][j] -= a.c[i];
    }
  }
  return all_real_roots_nonneg(charpoly_berkowitz(M));
}

u64 cyc_digest(const CycInt& a) {
  std::string s = std::to_string(a.m);
  for (const auto& x : a.c) {
    s += ',';
    s += x.get_str();
  }
  return fnv1a_str(s);
}

}  // namespace weber
