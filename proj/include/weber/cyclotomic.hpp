#pragma once
// Exact arithmetic in Z[zeta_m], m a power of two: coefficient vectors
// of length m/2 on the power basis 1, zeta, ..., zeta^(m/2-1) with the
// relation zeta^(m/2) = -1 (negacyclic).

#include <vector>

#include <gmpxx.h>

#include "weber/common.hpp"
#include "weber/intpoly.hpp"

namespace weber {

struct CycInt {
  u64 m;                     // root-of-unity order, power of two >= 2
  std::vector<mpz_class> c;  // length m/2

  CycInt() : m(0) {}
  explicit CycInt(u64 m_) : m(m_), c(m_ / 2, mpz_class(0)) {
    if (m_ < 2 || (m_ & (m_ - 1)) != 0) throw domain_error("CycInt: m must be a power of two >= 2");
  }
};

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_sub(const CycInt& a, const CycInt& b);
CycInt cyc_neg(const CycInt& a);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
bool cyc_eq(const CycInt& a, const CycInt& b);
bool cyc_is_zero(const CycInt& a);

// add sign * zeta^e (e in [0, m)) to a
void cyc_add_root(CycInt& a, u64 e, const mpz_class& sign);

// zeta -> zeta^t, t odd
CycInt galois_apply(const CycInt& a, u64 t);
// complex conjugation, t = m - 1
CycInt cyc_conj(const CycInt& a);

bool cyc_is_constant(const CycInt& a);

IntPoly cyc_to_poly(const CycInt& a);

// Nm_{Q(zeta_m)/Q}(a) = Res(x^(m/2) + 1, a(x)), signed
mpz_class field_norm(const CycInt& a);

// norm as the explicit product of Galois conjugates; O(m^2) ring
// multiplications, used as the independent oracle for small m
mpz_class field_norm_conjugates(const CycInt& a);

// for a with conj(a) = a: true iff every archimedean embedding of a is
// >= 0, decided exactly via the charpoly of multiplication-by-a
bool totally_nonneg(const CycInt& a);

// decimal digest of the coefficient vector (certificates, tests)
u64 cyc_digest(const CycInt& a);

}  // namespace weber
