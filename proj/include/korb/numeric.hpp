#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace korb {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals from GMP.  No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = a*x + b*y with g = gcd(a,b) >= 0.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& d) {
    if (!divides(d, a)) throw std::logic_error("exact_div: not divisible");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Floor quotient, any sign of b (b != 0).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    if (b > 0) {
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    } else {
        Int nb = -b;
        mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), nb.get_mpz_t());
        q = -q;
    }
    return q;
}

// a mod m in [0, m), m > 0.
inline Int mod_pos(const Int& a, const Int& m) {
    if (m <= 0) throw std::logic_error("mod_pos: modulus must be positive");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Quotient q with |a - q*b| <= |b|/2 (ties rounded down), b != 0.
inline Int div_nearest(const Int& a, const Int& b) {
    Int ab = abs(b);
    Int q = fdiv(a, ab);
    Int r = a - q * ab;  // r in [0, ab)
    if (2 * r > ab) q += 1;
    if (b < 0) q = -q;
    return q;
}

inline Rat rat_of(const Int& num, const Int& den) {
    if (den == 0) throw std::logic_error("rat_of: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_of(const Int& num) { return Rat(num); }

// Representative of q + 2Z in [0, 2).
inline Rat normalize_mod2(const Rat& q) {
    Int twice_den = 2 * q.get_den();
    Int num = mod_pos(q.get_num(), twice_den);
    return rat_of(num, q.get_den());
}

// Canonical string form "p/q" (q > 0, reduced); integers print without "/1".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_zero(const ZVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// gcd of all entries, >= 0.
inline Int content(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline ZVec operator+(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw std::logic_error("vector size mismatch");
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ZVec operator-(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw std::logic_error("vector size mismatch");
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline ZVec operator*(const Int& c, const ZVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline ZVec operator-(const ZVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

}  // namespace korb
