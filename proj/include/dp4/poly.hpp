#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dp4/rat.hpp"

namespace dp4 {

// ---------------------------------------------------------------- univariate

/// Dense univariate polynomial over Q.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rat& v) { return UPoly({v}); }

    int degree() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& t) const;
    UPoly derivative() const;
    UPoly monic() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Rat& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    /// Exact division; throws when the remainder is nonzero.
    UPoly divexact(const UPoly& d) const;
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

private:
    void trim();
    std::vector<Rat> c_;  // c_[i] is the t^i coefficient
};

UPoly upoly_gcd(UPoly a, UPoly b);  // monic gcd

/// Yun's algorithm: returns (squarefree factor, multiplicity) pairs with
/// product over factor^multiplicity equal to the input up to a constant.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

/// Integer coefficients, content 1, positive leading coefficient.
std::vector<Int> primitive_integer_coeffs(const UPoly& f);

/// All rational roots with multiplicities, via the rational root theorem
/// on the primitive integer model.  Pairs ((p, q), m) meaning root p/q.
std::vector<std::pair<std::pair<Int, Int>, int>> rational_roots(const UPoly& f);

// -------------------------------------------------------------- multivariate

constexpr int kNumVars = 5;  // T0..T4

using Monomial = std::array<unsigned, kNumVars>;

/// Sparse polynomial in T0..T4 over Q.
class MPoly {
public:
    MPoly() = default;
    static MPoly constant(const Rat& v);
    static MPoly variable(int i);

    bool is_zero() const { return t_.empty(); }
    int degree() const;
    bool is_homogeneous(int d) const;
    const std::map<Monomial, Rat>& terms() const { return t_; }
    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& v);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly scaled(const Rat& s) const;
    bool operator==(const MPoly& o) const { return t_ == o.t_; }

    template <typename T>
    Rat eval(const std::vector<T>& x) const {
        if ((int)x.size() != kNumVars) throw std::domain_error("eval: need 5 coordinates");
        Rat out(0);
        for (auto& [m, v] : t_) {
            Rat term(v);
            for (int i = 0; i < kNumVars; ++i)
                for (unsigned e = 0; e < m[i]; ++e) term *= Rat(x[i]);
            out += term;
        }
        return out;
    }

    std::string str() const;

private:
    std::map<Monomial, Rat> t_;
};

/// Parse an expression in T0..T4 with + - * ^ ( ) and rational literals.
/// Juxtaposition multiplies ("7T3^2" is 7*T3^2).  Throws std::invalid_argument
/// with a position on malformed input.
MPoly parse_poly(const std::string& text);

/// Linear form in T0..T4.
struct LinForm {
    std::array<Rat, kNumVars> c{};

    template <typename T>
    Rat eval(const std::vector<T>& x) const {
        Rat out(0);
        for (int i = 0; i < kNumVars; ++i) out += c[i] * Rat(x[i]);
        return out;
    }
    MPoly poly() const;
    bool is_zero() const;
    std::string str() const { return poly().str(); }
};

/// Extract a linear form; throws unless the input is homogeneous of degree 1.
LinForm to_linform(const MPoly& p);

}  // namespace dp4
