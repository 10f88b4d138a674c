#pragma once

#include <optional>

#include "dp4/arith.hpp"
#include "dp4/linalg.hpp"
#include "dp4/poly.hpp"

namespace dp4 {

/// Quadratic form in T0..T4 with symmetric rational Gram matrix.
class QuadForm5 {
public:
    QuadForm5() : gram_(kNumVars, kNumVars) {}
    explicit QuadForm5(QMat gram);
    /// From a homogeneous degree-2 polynomial.
    explicit QuadForm5(const MPoly& p);
    /// From the 15 monomial coefficients ordered
    /// T0^2, T0T1, T0T2, T0T3, T0T4, T1^2, T1T2, T1T3, T1T4,
    /// T2^2, T2T3, T2T4, T3^2, T3T4, T4^2.
    static QuadForm5 from_coeffs(const std::vector<Rat>& c15);

    const QMat& gram() const { return gram_; }
    MPoly poly() const;
    std::vector<Rat> coeffs15() const;
    bool is_zero() const { return gram_.is_zero(); }
    size_t rank() const { return gram_.rank(); }

    template <typename T>
    Rat eval(const std::vector<T>& x) const {
        return poly_cache().eval(x);
    }

    bool operator==(const QuadForm5& o) const { return gram_ == o.gram_; }

private:
    const MPoly& poly_cache() const;
    QMat gram_;
    mutable std::optional<MPoly> poly_;
};

struct Pencil {
    QuadForm5 q1, q2;

    Pencil() = default;
    Pencil(QuadForm5 a, QuadForm5 b);
    /// Member mu*q1 + nu*q2 as a Gram matrix.
    QMat member(const Rat& mu, const Rat& nu) const;
};

/// det(mu*M1 + nu*M2), a binary quintic; coeffs[k] multiplies mu^k nu^(5-k).
struct CharQuintic {
    std::array<Rat, 6> coeffs;

    bool is_zero() const;
    /// Dehomogenization f(t) = det(t*M1 + M2).
    UPoly dehomogenized() const;
    Rat eval(const Rat& mu, const Rat& nu) const;
};

/// A point of S_X in P^1, primitive integer (mu : nu), nu > 0 or (mu,nu)=(1,0).
struct SchemePoint {
    Int mu, nu;
    int multiplicity = 1;

    bool is_infinity() const { return sign(nu) == 0; }
    bool operator==(const SchemePoint& o) const {
        return mu == o.mu && nu == o.nu && multiplicity == o.multiplicity;
    }
    std::string str() const { return "(" + mu.get_str() + ":" + nu.get_str() + ")"; }
};

struct QuadraticFactor {
    std::array<Int, 3> coeffs;  // a t^2 + b t + c, primitive integer
    SquareClass disc;           // class of b^2 - 4ac
    int multiplicity = 1;
};

struct ResidualFactor {
    std::vector<Int> coeffs;  // primitive integer, degree >= 3, irreducible or unresolved
    int multiplicity = 1;
};

/// The degree-5 scheme where the pencil member drops rank, factored over Q.
struct SchemeSX {
    std::vector<SchemePoint> rational_points;  // infinity first, then t ascending
    std::vector<QuadraticFactor> quadratic_factors;
    std::vector<ResidualFactor> residuals;
    bool reduced = false;

    int degree() const;
    int rational_degree() const;  // sum of rational point multiplicities
    bool is_split() const { return rational_degree() == 5; }
};

struct DiscriminantVector {
    std::vector<SquareClass> classes;  // ordered like SchemeSX::rational_points
    bool complete = false;             // true when the scheme is split

    /// Product of all classes (Fact-3.3 style check).
    SquareClass product() const;
};

struct SimultaneousDiagonalization {
    QMat basis;                             // columns are the five cusp vectors
    std::vector<std::pair<Rat, Rat>> diag;  // (a_i, b_i) diagonal coefficients
};

struct ConeOrDegenerateError : std::runtime_error {
    ConeOrDegenerateError() : std::runtime_error("pencil is a cone or degenerate") {}
};

CharQuintic char_form(const Pencil& p);
bool is_cone(const Pencil& p);
SchemeSX scheme_points(const CharQuintic& c);
bool is_nonsingular_dp4(const Pencil& p);

/// Exact rank of the pencil member at a rational scheme point.
int rank_at(const Pencil& p, const SchemePoint& s);

/// Lagrange diagonalization over Q: returns (P, d) with P^T G P = diag(d).
/// pivot_order optionally reorders which variable is cleared first.
std::pair<QMat, std::vector<Rat>> lagrange_diagonalize(
    const QMat& gram, const std::vector<int>* pivot_order = nullptr);

/// Discriminant square class of a rank-4 form in five variables.
SquareClass rank4_discriminant(const QuadForm5& q,
                               const std::vector<int>* pivot_order = nullptr);

/// Rank-4 discriminants at all rational scheme points; complete iff split.
DiscriminantVector discriminants(const Pencil& p);

/// Cusp basis and diagonal coefficients; nullopt when S_X is not split.
std::optional<SimultaneousDiagonalization> simultaneous_diagonalize(const Pencil& p);

}  // namespace dp4
