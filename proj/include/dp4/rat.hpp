#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp4 {

using Int = mpz_class;
using Rat = mpq_class;

inline Int num(const Rat& q) { return Int(q.get_num()); }
inline Int den(const Rat& q) { return Int(q.get_den()); }

inline int sign(const Int& n) { return mpz_sgn(n.get_mpz_t()); }
inline int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline Int abs(const Int& n) { return ::abs(n); }

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

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (sign(n) < 0) throw std::domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return sign(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_square(const Rat& q) {
    return sign(q) >= 0 && is_perfect_square(num(q)) && is_perfect_square(den(q));
}

/// n mod m in [0, m).
inline Int mod_floor(const Int& n, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(Int n, const Int& p) {
    if (sign(n) == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (sign(r) != 0) break;
        n = q;
        ++v;
    }
    return v;
}

/// p-adic valuation of a nonzero rational.
inline long valuation(const Rat& q, const Int& p) {
    return valuation(num(q), p) - valuation(den(q), p);
}

inline Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod m");
    return r;
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return n.get_si();
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    return c.get_str();
}

}  // namespace dp4
