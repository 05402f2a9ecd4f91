#pragma once
// Polynomial arithmetic over F_ell and its quadratic extension,
// templated over the coefficient engine so the same code serves the
// u64 fast path (sieve) and the mpz path (arbitrary survivors).

#include <vector>

#include <gmpxx.h>

#include "weber/common.hpp"

namespace weber {

// --- coefficient engines --------------------------------------------

struct U64Mod {
  using elt = u64;
  u64 ell;
  elt reduce_mpz(const mpz_class& x) const { return mpz_fdiv_ui(x.get_mpz_t(), ell); }
  elt zero() const { return 0; }
  elt one() const { return 1 % ell; }
  elt add(elt a, elt b) const { return a + b < ell ? a + b : a + b - ell; }
  elt sub(elt a, elt b) const { return a >= b ? a - b : a + ell - b; }
  elt neg(elt a) const { return a ? ell - a : 0; }
  elt mul(elt a, elt b) const { return mulmod(a, b, ell); }
  elt inv(elt a) const { return powmod(a, ell - 2, ell); }
  elt pow(elt a, const mpz_class& e) const {
    elt r = one(), base = a;
    for (std::size_t i = 0, n = mpz_sizeinbase(e.get_mpz_t(), 2); i < n; i++) {
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, base);
      base = mul(base, base);
    }
    return r;
  }
  bool is_zero(elt a) const { return a == 0; }
  bool eq(elt a, elt b) const { return a == b; }
};

struct MpzMod {
  using elt = mpz_class;
  mpz_class ell;
  elt reduce_mpz(const mpz_class& x) const {
    mpz_class r = x % ell;
    if (r < 0) r += ell;
    return r;
  }
  elt zero() const { return 0; }
  elt one() const { return 1; }
  elt add(const elt& a, const elt& b) const {
    elt r = a + b;
    if (r >= ell) r -= ell;
    return r;
  }
  elt sub(const elt& a, const elt& b) const {
    elt r = a - b;
    if (r < 0) r += ell;
    return r;
  }
  elt neg(const elt& a) const { return a == 0 ? mpz_class(0) : mpz_class(ell - a); }
  elt mul(const elt& a, const elt& b) const { return a * b % ell; }
  elt inv(const elt& a) const {
    elt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), ell.get_mpz_t()) == 0)
      throw domain_error("MpzMod: non-invertible");
    return r;
  }
  elt pow(const elt& a, const mpz_class& e) const {
    elt r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), ell.get_mpz_t());
    return r;
  }
  bool is_zero(const elt& a) const { return a == 0; }
  bool eq(const elt& a, const elt& b) const { return a == b; }
};

// --- dense polynomials (ascending coefficients) ----------------------

template <class M>
struct PolyOps {
  M m;
  using elt = typename M::elt;
  using poly = std::vector<elt>;

  void trim(poly& p) const {
    while (!p.empty() && m.is_zero(p.back())) p.pop_back();
  }
  poly from_mpz(const std::vector<mpz_class>& c) const {
    poly p(c.size());
    for (std::size_t i = 0; i < c.size(); i++) p[i] = m.reduce_mpz(c[i]);
    trim(p);
    return p;
  }
  poly mul(const poly& a, const poly& b) const {
    if (a.empty() || b.empty()) return {};
    poly r(a.size() + b.size() - 1, m.zero());
    for (std::size_t i = 0; i < a.size(); i++) {
      if (m.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); j++)
        r[i + j] = m.add(r[i + j], m.mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  // a mod b, b monic
  poly mod(poly a, const poly& b) const {
    if (b.empty() || !m.eq(b.back(), m.one())) throw domain_error("poly mod: divisor not monic");
    std::size_t db = b.size() - 1;
    while (a.size() > db) {
      elt top = a.back();
      std::size_t off = a.size() - 1 - db;
      if (!m.is_zero(top)) {
        for (std::size_t i = 0; i < db; i++) a[off + i] = m.sub(a[off + i], m.mul(top, b[i]));
      }
      a.pop_back();
    }
    trim(a);
    return a;
  }
  poly mulmod(const poly& a, const poly& b, const poly& g) const { return mod(mul(a, b), g); }
  poly powmod(poly base, const mpz_class& e, const poly& g) const {
    poly r{m.one()};
    base = mod(std::move(base), g);
    for (std::size_t i = 0, n = mpz_sizeinbase(e.get_mpz_t(), 2); i < n; i++) {
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, g);
      base = mulmod(base, base, g);
    }
    return r;
  }
  poly make_monic(poly p) const {
    trim(p);
    if (p.empty()) return p;
    elt li = m.inv(p.back());
    for (auto& x : p) x = m.mul(x, li);
    return p;
  }
  poly gcd(poly a, poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      poly r = mod_general(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return make_monic(a);
  }
  // a mod b for arbitrary (non-monic) b
  poly mod_general(poly a, poly b) const {
    trim(b);
    if (b.empty()) throw domain_error("poly mod: zero divisor");
    b = make_monic(std::move(b));
    return mod(std::move(a), b);
  }
  elt eval(const poly& p, const elt& x) const {
    elt r = m.zero();
    for (std::size_t i = p.size(); i-- > 0;) r = m.add(m.mul(r, x), p[i]);
    return r;
  }
  poly sub(const poly& a, const poly& b) const {
    poly r = a;
    if (b.size() > r.size()) r.resize(b.size(), m.zero());
    for (std::size_t i = 0; i < b.size(); i++) r[i] = m.sub(i < a.size() ? a[i] : m.zero(), b[i]);
    trim(r);
    return r;
  }
  bool eq(const poly& a, const poly& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); i++)
      if (!m.eq(a[i], b[i])) return false;
    return true;
  }
};

// --- F_{ell^2} as F_ell[w]/(w^2 - d), d a non-residue ----------------

template <class M>
struct Quad {
  M m;
  typename M::elt d;
  struct elt {
    typename M::elt a, b;  // a + b w
  };
  elt make(typename M::elt a, typename M::elt b) const { return {a, b}; }
  elt one() const { return {m.one(), m.zero()}; }
  elt mul(const elt& x, const elt& y) const {
    // (a1 + b1 w)(a2 + b2 w) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) w
    return {m.add(m.mul(x.a, y.a), m.mul(d, m.mul(x.b, y.b))),
            m.add(m.mul(x.a, y.b), m.mul(x.b, y.a))};
  }
  elt pow(elt base, const mpz_class& e) const {
    elt r = one();
    for (std::size_t i = 0, n = mpz_sizeinbase(e.get_mpz_t(), 2); i < n; i++) {
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, base);
      base = mul(base, base);
    }
    return r;
  }
  elt inv(const elt& x) const {
    // (a + b w)^-1 = (a - b w)/(a^2 - d b^2)
    typename M::elt nrm = m.sub(m.mul(x.a, x.a), m.mul(d, m.mul(x.b, x.b)));
    typename M::elt ni = m.inv(nrm);
    return {m.mul(x.a, ni), m.mul(m.neg(x.b), ni)};
  }
  bool is_one(const elt& x) const { return m.eq(x.a, m.one()) && m.is_zero(x.b); }
  bool in_base(const elt& x) const { return m.is_zero(x.b); }
};

// smallest quadratic non-residue mod ell (ell odd prime)
template <class M>
typename M::elt find_nonresidue(const M& m, const mpz_class& ell_z) {
  mpz_class e = (ell_z - 1) / 2;
  for (u64 c = 2;; c++) {
    typename M::elt x = m.reduce_mpz(mpz_class(c));
    typename M::elt p = m.pow(x, e);
    if (!m.eq(p, m.one())) {
      if (!m.eq(p, m.reduce_mpz(ell_z - 1))) throw integrity_error("find_nonresidue: euler value");
      return x;
    }
    if (c > 1000) throw integrity_error("find_nonresidue: none below 1000");
  }
}

}  // namespace weber
