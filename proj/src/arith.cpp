#include "dp4/arith.hpp"

#include <algorithm>
#include <sstream>

namespace dp4 {

PlaceSet::PlaceSet(std::vector<Place> ps) {
    for (auto& v : ps) insert(v);
}

void PlaceSet::insert(const Place& v) {
    auto it = std::lower_bound(places_.begin(), places_.end(), v);
    if (it != places_.end() && *it == v) return;
    places_.insert(it, v);
}

bool PlaceSet::contains(const Place& v) const {
    return std::binary_search(places_.begin(), places_.end(), v);
}

std::string PlaceSet::str() const {
    if (places_.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < places_.size(); ++i) os << (i ? "," : "") << places_[i].str();
    os << "}";
    return os.str();
}

SquareClass::SquareClass(Int v) : value_(std::move(v)) {
    if (sign(value_) == 0) throw std::domain_error("SquareClass must be nonzero");
    for (auto& [p, e] : factor(value_))
        if (e > 1) throw std::domain_error("SquareClass value not squarefree: " + value_.get_str());
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    return squarefree_part(Int(value_ * o.value_));
}

// ---- primality ----

static bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, long s) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    long s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // this witness set is deterministic below 3.3 * 10^24 > 2^64
        for (long a : small)
            if (miller_rabin_witness(n, Int(a), d, s)) return false;
        return true;
    }
    // probabilistic: 64 rounds, error < 4^-64 = 2^-128
    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, 0x5eed1234u);
    bool composite = false;
    for (int i = 0; i < 64 && !composite; ++i) {
        Int a;
        mpz_urandomm(a.get_mpz_t(), st, Int(n - 3).get_mpz_t());
        a += 2;
        composite = miller_rabin_witness(n, a, d, s);
    }
    gmp_randclear(st);
    return !composite;
}

// ---- factorization ----

static Int pollard_rho(const Int& n) {
    // Brent's variant; n odd composite with no small factors.
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, prod = 1;
        auto f = [&](const Int& v) { return Int((v * v + c) % n); };
        int iter = 0;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            prod = prod * dp4::abs(x - y) % n;
            if (++iter % 64 == 0 || x == y) {
                d = gcd(prod, n);
                prod = 1;
            }
            if (x == y) break;
        }
        if (d != 1 && d != n) return d;
    }
}

static void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

static const unsigned long kTrialBound = 1000000;

std::vector<std::pair<Int, int>> factor(const Int& n_in) {
    if (sign(n_in) == 0) throw std::domain_error("factor(0)");
    Int n = dp4::abs(n_in);
    std::map<Int, int> out;
    if (n.fits_ulong_p()) {
        unsigned long m = n.get_ui();
        for (unsigned long p = 2; p <= kTrialBound && p * p <= m; p += (p == 2 ? 1 : 2)) {
            while (m % p == 0) {
                out[Int(p)]++;
                m /= p;
            }
        }
        n = m;
    } else {
        for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                out[Int(p)]++;
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            }
        }
    }
    if (n > 1) {
        if (n <= Int(kTrialBound) * kTrialBound || is_prime(n))
            out[n]++;
        else
            factor_rec(n, out);
    }
    return {out.begin(), out.end()};
}

SquareClass squarefree_part(const Int& x) {
    if (sign(x) == 0) throw std::domain_error("squarefree_part(0)");
    Int s = sign(x) < 0 ? -1 : 1;
    for (auto& [p, e] : factor(x))
        if (e % 2) s *= p;
    return SquareClass(std::move(s));
}

SquareClass squarefree_part(const Rat& x) {
    if (sign(x) == 0) throw std::domain_error("squarefree_part(0)");
    // n/d and n*d lie in the same square class
    return squarefree_part(Int(num(x) * den(x)));
}

// ---- symbols ----

int legendre(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("legendre: p must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for odd u
static int eps2(const Int& u) { return mod_floor(u, 4) == 1 ? 0 : 1; }
static int omega2(const Int& u) {
    Int m = mod_floor(u, 8);
    return (m == 1 || m == 7) ? 0 : 1;
}

// Writes a = p^v * u' / d' with p-free u', d'; unit_numden = u'*d' differs
// from the unit part u'/d' by the square d'^2, so symbols are unaffected.
static void split_at(const Rat& a, const Int& p, long& v, Int& unit_numden) {
    Int n = num(a), d = den(a);
    long vn = valuation(n, p);
    long vd = valuation(d, p);
    v = vn - vd;
    Int pn = pow_int(p, (unsigned long)vn), pd = pow_int(p, (unsigned long)vd);
    unit_numden = (n / pn) * (d / pd);
}

int hilbert(const Rat& a, const Rat& b, const Place& v) {
    if (sign(a) == 0 || sign(b) == 0) throw std::domain_error("hilbert: zero argument");
    if (v.is_infinite()) return (sign(a) < 0 && sign(b) < 0) ? -1 : 1;
    const Int& p = v.prime();
    long va, vb;
    Int u, w;
    split_at(a, p, va, u);
    split_at(b, p, vb, w);
    int pa = (int)(((va % 2) + 2) % 2), pb = (int)(((vb % 2) + 2) % 2);
    if (p == 2) {
        int e = eps2(u) * eps2(w) + pa * omega2(w) + pb * omega2(u);
        return (e % 2) ? -1 : 1;
    }
    // odd p: (-1)^(va*vb*eps(p)) * (u/p)^vb * (w/p)^va
    int s = 1;
    if (pa && pb && eps2(p)) s = -s;
    if (pb) s *= legendre(u, p);
    if (pa) s *= legendre(w, p);
    return s;
}

PlaceSet hilbert_support(const Rat& a, const Rat& b) {
    PlaceSet out;
    std::vector<Place> candidates;
    candidates.push_back(Place::infinity());
    candidates.push_back(Place::finite(2));
    auto add_primes = [&](const Rat& x) {
        for (auto& [p, e] : factor(num(x) * den(x)))
            if (p != 2) candidates.push_back(Place::finite(p));
    };
    add_primes(a);
    add_primes(b);
    for (auto& v : candidates)
        if (hilbert(a, b, v) == -1) out.insert(v);
    if (out.size() % 2 != 0)
        throw std::logic_error("hilbert product formula violated");  // unreachable
    return out;
}

// ---- CRT / prime search ----

std::pair<Int, Int> crt_combine(const std::vector<std::pair<Int, Int>>& congruences) {
    Int r = 0, m = 1;
    for (auto& [ri, mi] : congruences) {
        if (mi < 1) throw std::domain_error("crt: modulus must be positive");
        if (mi == 1) continue;
        if (gcd(m, mi) != 1) throw std::domain_error("crt: moduli not pairwise coprime");
        // x = r + m*t with t = (ri - r)/m (mod mi)
        Int t = mod_floor((ri - r) * inv_mod(m, mi), mi);
        r += m * t;
        m *= mi;
    }
    return {mod_floor(r, m), m};
}

std::optional<Int> prime_in_progression(const Int& residue, const Int& modulus,
                                        const std::function<bool(const Int&)>& pred,
                                        const Int& bound) {
    if (modulus < 1) throw std::domain_error("modulus must be positive");
    if (modulus != 1 && gcd(residue, modulus) != 1)
        throw std::domain_error("prime_in_progression: gcd(residue, modulus) != 1");
    Int n = mod_floor(residue, modulus);
    if (n < 2) {
        Int k = (Int(2) - n + modulus - 1) / modulus;
        n += modulus * k;
    }
    for (; n <= bound; n += modulus)
        if (is_prime(n) && pred(n)) return n;
    return std::nullopt;
}

bool is_local_square(const Rat& a, const Place& v) {
    if (sign(a) == 0) throw std::domain_error("is_local_square(0)");
    if (v.is_infinite()) return sign(a) > 0;
    const Int& p = v.prime();
    long val;
    Int u;
    split_at(a, p, val, u);
    if (val % 2) return false;
    if (p == 2) return mod_floor(u, 8) == 1;
    return legendre(u, p) == 1;
}

}  // namespace dp4
