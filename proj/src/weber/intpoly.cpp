#include "weber/intpoly.hpp"

#include <algorithm>

#include "weber/ntt.hpp"

namespace weber {

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.c.size(); i++) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); i++) r[i] += b.c[i];
  return IntPoly(std::move(r));
}

IntPoly poly_neg(const IntPoly& a) {
  std::vector<mpz_class> r = a.c;
  for (auto& x : r) x = -x;
  return IntPoly(std::move(r));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) { return poly_add(a, poly_neg(b)); }

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.zero() || b.zero()) return IntPoly();
  std::vector<mpz_class> r(a.c.size() + b.c.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c.size(); i++) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); j++) r[i + j] += a.c[i] * b.c[j];
  }
  return IntPoly(std::move(r));
}

IntPoly poly_mod_monic(const IntPoly& a, const IntPoly& b) {
  if (b.zero() || b.lc() != 1) throw domain_error("poly_mod_monic: divisor not monic");
  std::vector<mpz_class> r = a.c;
  long db = b.degree();
  for (long i = static_cast<long>(r.size()) - 1; i >= db; i--) {
    if (r[i] == 0) continue;
    mpz_class q = r[i];
    for (long j = 0; j <= db; j++) r[i - db + j] -= q * b.c[j];
  }
  return IntPoly(std::move(r));
}

IntPoly poly_compose_x2m2(const IntPoly& a) {
  // Horner in t = x^2 - 2
  IntPoly t(std::vector<mpz_class>{-2, 0, 1});
  IntPoly r;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    r = poly_mul(r, t);
    r = poly_add(r, IntPoly(std::vector<mpz_class>{a.c[i]}));
  }
  return r;
}

bool poly_eq(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

namespace {

std::vector<u64> reduce_mod(const IntPoly& a, u64 p) {
  std::vector<u64> r(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); i++) r[i] = mpz_fdiv_ui(a.c[i].get_mpz_t(), p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

u64 resultant_mod_p(std::vector<u64> A, std::vector<u64> B, u64 p) {
  auto deg = [](const std::vector<u64>& v) { return static_cast<long>(v.size()) - 1; };
  if (A.empty() || B.empty()) return 0;
  u64 res = 1;
  // Res(A,B) = (-1)^(dA dB) lc(B)^(dA-dR) Res(B,R), R = A mod B
  while (deg(B) > 0) {
    long dA = deg(A), dB = deg(B);
    u64 lb = B.back();
    u64 lbinv = powmod(lb, p - 2, p);
    // A mod B in place
    for (long i = dA; i >= dB; i--) {
      u64 t = A[static_cast<std::size_t>(i)];
      if (t == 0) continue;
      u64 q = mulmod(t, lbinv, p);
      for (long j = 0; j <= dB; j++) {
        auto idx = static_cast<std::size_t>(i - dB + j);
        u64 s = mulmod(q, B[static_cast<std::size_t>(j)], p);
        A[idx] = A[idx] >= s ? A[idx] - s : A[idx] + p - s;
      }
    }
    while (!A.empty() && A.back() == 0) A.pop_back();
    if (A.empty()) return 0;  // common factor of positive degree
    long dR = deg(A);
    if ((dA & 1) && (dB & 1)) res = res == 0 ? 0 : p - res;
    res = mulmod(res, powmod(lb, static_cast<u64>(dA - dR), p), p);
    std::swap(A, B);
  }
  // deg B == 0
  return mulmod(res, powmod(B[0], static_cast<u64>(deg(A)), p), p);
}

}  // namespace

mpz_class resultant_crt(const IntPoly& a, const IntPoly& b) {
  if (a.zero() || b.zero()) return 0;
  if (a.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a.c[0].get_mpz_t(), static_cast<unsigned long>(b.degree()));
    return r;
  }
  if (b.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.c[0].get_mpz_t(), static_cast<unsigned long>(a.degree()));
    return r;
  }
  // Hadamard: |Res| <= ||a||^db * ||b||^da, in bits
  mpz_class sa = 0, sb = 0;
  for (const auto& x : a.c) sa += x * x;
  for (const auto& x : b.c) sb += x * x;
  std::size_t bits_a = mpz_sizeinbase(sa.get_mpz_t(), 2);
  std::size_t bits_b = mpz_sizeinbase(sb.get_mpz_t(), 2);
  std::size_t bound_bits = static_cast<std::size_t>(b.degree()) * (bits_a / 2 + 1) +
                           static_cast<std::size_t>(a.degree()) * (bits_b / 2 + 1) + 4;
  mpz_class P = 1, acc = 0;
  std::size_t pi = 0;
  while (mpz_sizeinbase(P.get_mpz_t(), 2) <= bound_bits + 1) {
    u64 p = ntt_primes(pi + 1)[pi].p;
    pi++;
    // skip primes killing a leading coefficient
    if (mpz_fdiv_ui(a.lc().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.lc().get_mpz_t(), p) == 0) continue;
    u64 rp = resultant_mod_p(reduce_mod(a, p), reduce_mod(b, p), p);
    // incremental CRT: acc <- acc + P * ((rp - acc) / P mod p)
    mpz_class pz = p, diff = (mpz_class(rp) - acc) % pz;
    if (diff < 0) diff += pz;
    mpz_class pinv;
    mpz_class pmodp = P % pz;
    if (mpz_invert(pinv.get_mpz_t(), pmodp.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw integrity_error("resultant: crt invert failed");
    acc += P * (diff * pinv % pz);
    P *= pz;
  }
  if (acc > P / 2) acc -= P;
  return acc;
}

namespace {

// pseudo-remainder lc(B)^(dA-dB+1) * A mod B
IntPoly prem(IntPoly A, const IntPoly& B) {
  long dB = B.degree();
  long e = A.degree() - dB + 1;
  while (!A.zero() && A.degree() >= dB) {
    long dA = A.degree();
    std::vector<mpz_class> r(A.c.size(), mpz_class(0));
    for (std::size_t i = 0; i < A.c.size(); i++) r[i] = A.c[i] * B.lc();
    for (long j = 0; j <= dB; j++)
      r[static_cast<std::size_t>(dA - dB + j)] -= A.c[static_cast<std::size_t>(dA)] * B.c[static_cast<std::size_t>(j)];
    A = IntPoly(std::move(r));
    e--;
  }
  // normalize the remaining multiplier so the result is exactly lc^(dA-dB+1) A mod B
  while (e-- > 0) {
    for (auto& x : A.c) x *= B.lc();
  }
  A.trim();
  return A;
}

}  // namespace

mpz_class resultant_subresultant(const IntPoly& a, const IntPoly& b) {
  if (a.zero() || b.zero()) return 0;
  if (a.degree() == 0 || b.degree() == 0) return resultant_crt(a, b);
  IntPoly A = a, B = b;
  int s = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    std::swap(A, B);
  }
  mpz_class g = 1, h = 1;
  while (true) {
    long dA = A.degree(), dB = B.degree();
    long delta = dA - dB;
    if ((dA & 1) && (dB & 1)) s = -s;
    IntPoly R = prem(A, B);
    A = B;
    // B = R / (g h^delta), exact
    mpz_class divisor = g;
    for (long i = 0; i < delta; i++) divisor *= h;
    std::vector<mpz_class> nb = R.c;
    for (auto& x : nb) {
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
      x = q;
    }
    B = IntPoly(std::move(nb));
    g = A.lc();
    // h = g^delta h^(1-delta), exact
    if (delta > 0) {
      mpz_class num = 1;
      for (long i = 0; i < delta; i++) num *= g;
      for (long i = 0; i < delta - 1; i++) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), h.get_mpz_t());
        num = q;
      }
      h = num;
    }
    if (B.zero()) return 0;
    if (B.degree() == 0) {
      // res = s * lc(B)^dA / h^(dA - 1)
      long d = A.degree();
      mpz_class num = 1;
      for (long i = 0; i < d; i++) num *= B.c[0];
      for (long i = 0; i < d - 1; i++) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), h.get_mpz_t());
        num = q;
      }
      return s < 0 ? mpz_class(-num) : num;
    }
  }
}

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
  mpz_class r = resultant_crt(a, b);
  if (std::min(a.degree(), b.degree()) <= 8 && std::max(a.degree(), b.degree()) <= 64 &&
      !a.zero() && !b.zero()) {
    mpz_class r2 = resultant_subresultant(a, b);
    if (r != r2) throw integrity_error("resultant: crt vs subresultant mismatch");
  }
  return r;
}

IntPoly minimal_polynomial(int k) {
  if (k < 3 || k > 16) throw domain_error("minimal_polynomial: k out of range");
  IntPoly g(std::vector<mpz_class>{-2, 0, 1});
  for (int i = 3; i < k; i++) g = poly_compose_x2m2(g);
  return g;
}

IntPoly cyclotomic_unit(int k, u64 a) {
  if ((a & 1) == 0) throw domain_error("cyclotomic_unit: a must be odd");
  IntPoly g = minimal_polynomial(k);
  a &= (1ull << k) - 1;
  if (a == 0) throw domain_error("cyclotomic_unit: a = 0 mod 2^k");
  // V_1 = 1, V_2 = x, V_{j+1} = x V_j - V_{j-1}, reduced mod g_k
  IntPoly x(std::vector<mpz_class>{0, 1});
  IntPoly vp(std::vector<mpz_class>{1});  // V_1
  if (a == 1) return vp;
  IntPoly v = x;  // V_2
  for (u64 j = 2; j < a; j++) {
    IntPoly nx = poly_mod_monic(poly_sub(poly_mul(x, v), vp), g);
    vp = v;
    v = nx;
  }
  return v;
}

mpz_class unit_norm(int k, u64 a) {
  IntPoly g = minimal_polynomial(k);
  IntPoly v = cyclotomic_unit(k, a);
  return resultant(g, v);
}

std::vector<mpz_class> charpoly_berkowitz(const std::vector<std::vector<mpz_class>>& M) {
  std::size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw domain_error("charpoly: matrix not square");
  // pol holds coefficients, leading first
  std::vector<mpz_class> pol{1};
  for (std::size_t i = 0; i < n; i++) {
    // Toeplitz column: [1, -M[i][i], -R C, -R A C, -R A^2 C, ...]
    std::vector<mpz_class> v(i + 2);
    v[0] = 1;
    v[1] = -M[i][i];
    if (i > 0) {
      std::vector<mpz_class> w(i);
      for (std::size_t r = 0; r < i; r++) w[r] = M[r][i];  // C
      for (std::size_t j = 0; j + 2 <= i + 1; j++) {
        mpz_class dot = 0;
        for (std::size_t r = 0; r < i; r++) dot += M[i][r] * w[r];
        v[j + 2] = -dot;
        if (j + 3 <= i + 1) {
          std::vector<mpz_class> nw(i, mpz_class(0));
          for (std::size_t r = 0; r < i; r++) {
            if (w[r] == 0) continue;
            for (std::size_t q = 0; q < i; q++) nw[q] += M[q][r] * w[r];
          }
          w = std::move(nw);
        }
      }
    }
    // pol <- T(v) * pol
    std::vector<mpz_class> np(i + 2, mpz_class(0));
    for (std::size_t r = 0; r < i + 2; r++)
      for (std::size_t cidx = 0; cidx < pol.size() && cidx <= r; cidx++)
        np[r] += v[r - cidx] * pol[cidx];
    pol = std::move(np);
  }
  std::reverse(pol.begin(), pol.end());  // ascending
  return pol;
}

bool all_real_roots_nonneg(const std::vector<mpz_class>& p) {
  if (p.empty()) throw domain_error("all_real_roots_nonneg: empty");
  std::size_t n = p.size() - 1;
  int lead = sgn(p[n]);
  if (lead == 0) throw domain_error("all_real_roots_nonneg: zero leading coeff");
  for (std::size_t i = 0; i <= n; i++) {
    int want = ((n - i) % 2 == 0) ? lead : -lead;
    int have = sgn(p[i]);
    if (have != 0 && have != want) return false;
  }
  return true;
}

}  // namespace weber
