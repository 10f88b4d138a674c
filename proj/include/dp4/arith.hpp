#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dp4/rat.hpp"

namespace dp4 {

/// A place of Q: either the archimedean place or a finite prime.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place finite(Int p) {
        Place v;
        v.finite_ = true;
        v.p_ = std::move(p);
        return v;
    }

    bool is_infinite() const { return !finite_; }
    bool is_finite() const { return finite_; }
    const Int& prime() const {
        if (!finite_) throw std::domain_error("infinite place has no prime");
        return p_;
    }

    bool operator==(const Place& o) const { return finite_ == o.finite_ && p_ == o.p_; }
    bool operator!=(const Place& o) const { return !(*this == o); }
    /// Finite primes ascending, then infinity.
    bool operator<(const Place& o) const {
        if (finite_ != o.finite_) return finite_;
        return finite_ && p_ < o.p_;
    }

    std::string str() const { return finite_ ? p_.get_str() : "inf"; }

private:
    Place() = default;
    bool finite_ = false;
    Int p_ = 0;
};

/// Finite ordered set of places, no duplicates.
class PlaceSet {
public:
    PlaceSet() = default;
    explicit PlaceSet(std::vector<Place> ps);

    void insert(const Place& v);
    bool contains(const Place& v) const;
    size_t size() const { return places_.size(); }
    bool empty() const { return places_.empty(); }
    const std::vector<Place>& places() const { return places_; }
    auto begin() const { return places_.begin(); }
    auto end() const { return places_.end(); }
    bool operator==(const PlaceSet& o) const { return places_ == o.places_; }

    std::string str() const;

private:
    std::vector<Place> places_;  // sorted
};

/// Element of Q*/(Q*)^2, stored as the squarefree integer representative.
class SquareClass {
public:
    SquareClass() : value_(1) {}
    explicit SquareClass(Int squarefree_value);

    const Int& value() const { return value_; }
    bool is_trivial() const { return value_ == 1; }
    bool operator==(const SquareClass& o) const { return value_ == o.value_; }
    bool operator!=(const SquareClass& o) const { return value_ != o.value_; }
    bool operator<(const SquareClass& o) const { return value_ < o.value_; }

    SquareClass operator*(const SquareClass& o) const;

private:
    Int value_;
};

// ---- factorization & primality ----

/// Deterministic for |n| < 2^64, Miller-Rabin with 64 rounds beyond.
bool is_prime(const Int& n);

/// Prime factorization of |n|, n != 0, as sorted (prime, exponent) pairs.
/// Trial division to 10^6, then Pollard rho on the remaining cofactor.
std::vector<std::pair<Int, int>> factor(const Int& n);

/// Squarefree integer s with x = s * r^2 for rational r; sign(s) = sign(x).
SquareClass squarefree_part(const Rat& x);
SquareClass squarefree_part(const Int& x);

// ---- symbols ----

/// Legendre symbol (a/p) for an odd prime p: 0 iff p | a, else +-1.
int legendre(const Int& a, const Int& p);

/// Hilbert symbol (a,b)_v over Q_v, a,b nonzero.
int hilbert(const Rat& a, const Rat& b, const Place& v);

/// All places where (a,b)_v = -1; always of even cardinality.
PlaceSet hilbert_support(const Rat& a, const Rat& b);

// ---- CRT and prime search ----

/// Combine congruences x = r_i (mod m_i), pairwise coprime moduli.
/// Returns (residue, modulus); ((0,1)) for an empty list.
std::pair<Int, Int> crt_combine(const std::vector<std::pair<Int, Int>>& congruences);

/// Smallest prime p = residue (mod modulus), p <= bound, satisfying pred.
/// Requires gcd(residue, modulus) = 1. nullopt when the bound is exhausted.
std::optional<Int> prime_in_progression(const Int& residue, const Int& modulus,
                                        const std::function<bool(const Int&)>& pred,
                                        const Int& bound);

// ---- local square tests ----

/// Whether a nonzero rational is a square in Q_p (p = 2 handled via mod-8 units).
bool is_local_square(const Rat& a, const Place& v);

}  // namespace dp4
