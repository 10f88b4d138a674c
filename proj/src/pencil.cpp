#include "dp4/pencil.hpp"

#include <algorithm>

namespace dp4 {

QuadForm5::QuadForm5(QMat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != kNumVars || gram_.cols() != kNumVars)
        throw std::domain_error("QuadForm5: Gram matrix must be 5x5");
    if (!gram_.is_symmetric()) throw std::domain_error("QuadForm5: Gram matrix not symmetric");
}

QuadForm5::QuadForm5(const MPoly& p) : gram_(kNumVars, kNumVars) {
    if (!p.is_zero() && !p.is_homogeneous(2))
        throw std::domain_error("QuadForm5: polynomial is not homogeneous of degree 2");
    for (auto& [m, v] : p.terms()) {
        int i = -1, j = -1;
        for (int k = 0; k < kNumVars; ++k) {
            if (m[k] == 2) i = j = k;
            else if (m[k] == 1) (i < 0 ? i : j) = k;
        }
        if (i == j) gram_.at(i, i) = v;
        else {
            gram_.at(i, j) = v / 2;
            gram_.at(j, i) = v / 2;
        }
    }
}

QuadForm5 QuadForm5::from_coeffs(const std::vector<Rat>& c15) {
    if (c15.size() != 15) throw std::domain_error("expected 15 coefficients");
    MPoly p;
    size_t k = 0;
    for (int i = 0; i < kNumVars; ++i)
        for (int j = i; j < kNumVars; ++j) {
            Monomial m{};
            m[i] += 1;
            m[j] += 1;
            p.add_term(m, c15[k++]);
        }
    return QuadForm5(p);
}

MPoly QuadForm5::poly() const {
    MPoly p;
    for (int i = 0; i < kNumVars; ++i)
        for (int j = i; j < kNumVars; ++j) {
            Monomial m{};
            m[i] += 1;
            m[j] += 1;
            p.add_term(m, i == j ? gram_.at(i, i) : gram_.at(i, j) * 2);
        }
    return p;
}

std::vector<Rat> QuadForm5::coeffs15() const {
    std::vector<Rat> out;
    MPoly p = poly();
    for (int i = 0; i < kNumVars; ++i)
        for (int j = i; j < kNumVars; ++j) {
            Monomial m{};
            m[i] += 1;
            m[j] += 1;
            out.push_back(p.coeff(m));
        }
    return out;
}

const MPoly& QuadForm5::poly_cache() const {
    if (!poly_) poly_ = poly();
    return *poly_;
}

Pencil::Pencil(QuadForm5 a, QuadForm5 b) : q1(std::move(a)), q2(std::move(b)) {
    if (q1.is_zero() && q2.is_zero()) throw std::domain_error("pencil: both forms are zero");
}

QMat Pencil::member(const Rat& mu, const Rat& nu) const {
    return q1.gram().scaled(mu) + q2.gram().scaled(nu);
}

bool CharQuintic::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return sign(c) == 0; });
}

UPoly CharQuintic::dehomogenized() const {
    return UPoly(std::vector<Rat>(coeffs.begin(), coeffs.end()));
}

Rat CharQuintic::eval(const Rat& mu, const Rat& nu) const {
    Rat out(0);
    for (int k = 0; k <= 5; ++k) {
        Rat t = coeffs[k];
        for (int i = 0; i < k; ++i) t *= mu;
        for (int i = k; i < 5; ++i) t *= nu;
        out += t;
    }
    return out;
}

CharQuintic char_form(const Pencil& p) {
    // f(t) = det(t*M1 + M2) has degree <= 5; interpolate at 6 nodes.
    static const long nodes[6] = {0, 1, -1, 2, -2, 3};
    std::vector<Rat> vals;
    for (long t : nodes) vals.push_back(p.member(Rat(t), Rat(1)).det());
    // Lagrange interpolation
    std::array<Rat, 6> c{};
    for (int i = 0; i < 6; ++i) {
        // basis polynomial for node i
        std::vector<Rat> b{Rat(1)};
        Rat denom(1);
        for (int j = 0; j < 6; ++j) {
            if (j == i) continue;
            std::vector<Rat> nb(b.size() + 1, Rat(0));
            for (size_t k = 0; k < b.size(); ++k) {
                nb[k + 1] += b[k];
                nb[k] -= b[k] * Rat(nodes[j]);
            }
            b = std::move(nb);
            denom *= Rat(nodes[i] - nodes[j]);
        }
        Rat w = vals[i] / denom;
        for (size_t k = 0; k < b.size(); ++k) c[k] += b[k] * w;
    }
    CharQuintic out{c};
    if (out.is_zero()) throw ConeOrDegenerateError();
    return out;
}

bool is_cone(const Pencil& p) {
    // common kernel vector <=> stacked 10x5 matrix of both Grams has rank < 5
    QMat stacked(2 * kNumVars, kNumVars);
    for (int i = 0; i < kNumVars; ++i)
        for (int j = 0; j < kNumVars; ++j) {
            stacked.at(i, j) = p.q1.gram().at(i, j);
            stacked.at(kNumVars + i, j) = p.q2.gram().at(i, j);
        }
    return stacked.rank() < kNumVars;
}

int SchemeSX::degree() const {
    int d = rational_degree();
    for (auto& q : quadratic_factors) d += 2 * q.multiplicity;
    for (auto& r : residuals) d += ((int)r.coeffs.size() - 1) * r.multiplicity;
    return d;
}

int SchemeSX::rational_degree() const {
    int d = 0;
    for (auto& s : rational_points) d += s.multiplicity;
    return d;
}

SquareClass DiscriminantVector::product() const {
    SquareClass out;
    for (auto& c : classes) out = out * c;
    return out;
}

SchemeSX scheme_points(const CharQuintic& c) {
    if (c.is_zero()) throw std::domain_error("scheme_points: identically zero quintic");
    SchemeSX out;
    UPoly f = c.dehomogenized();
    int m_inf = 5 - f.degree();
    if (m_inf > 0) out.rational_points.push_back({Int(1), Int(0), m_inf});

    for (auto& [pq, m] : rational_roots(f)) {
        // root p/q corresponds to (mu : nu) = (p : q), q > 0 by construction
        out.rational_points.push_back({pq.first, pq.second, m});
    }
    // remove rational roots from f
    for (auto& s : out.rational_points) {
        if (s.is_infinity()) continue;
        UPoly lin({Rat(-s.mu), Rat(s.nu)});
        for (int i = 0; i < s.multiplicity; ++i) f = f.divexact(lin);
    }
    // leftover: squarefree decomposition, then classify by degree
    for (auto& [g, m] : squarefree_decomposition(f)) {
        if (g.degree() <= 0) continue;
        if (g.degree() == 1)
            throw std::logic_error("rational root survived root extraction");
        auto ci = primitive_integer_coeffs(g);
        if (g.degree() == 2) {
            Int disc = ci[1] * ci[1] - 4 * ci[2] * ci[0];
            out.quadratic_factors.push_back(
                {{ci[2], ci[1], ci[0]}, squarefree_part(disc), m});
        } else {
            std::vector<Int> rev(ci.rbegin(), ci.rend());
            out.residuals.push_back({rev, m});
        }
    }
    // reduced <=> no multiple factor: gcd(f0, f0') constant and infinity mult <= 1
    UPoly f0 = c.dehomogenized();
    out.reduced = (m_inf <= 1) && upoly_gcd(f0, f0.derivative()).degree() == 0;
    if (out.degree() != 5) throw std::logic_error("scheme degree mismatch");
    return out;
}

bool is_nonsingular_dp4(const Pencil& p) {
    if (is_cone(p)) return false;
    CharQuintic c;
    try {
        c = char_form(p);
    } catch (const ConeOrDegenerateError&) {
        return false;
    }
    return scheme_points(c).reduced;
}

int rank_at(const Pencil& p, const SchemePoint& s) {
    CharQuintic c = char_form(p);
    if (sign(c.eval(Rat(s.mu), Rat(s.nu))) != 0)
        throw std::domain_error("rank_at: point is not on the scheme");
    return (int)p.member(Rat(s.mu), Rat(s.nu)).rank();
}

std::pair<QMat, std::vector<Rat>> lagrange_diagonalize(const QMat& gram,
                                                       const std::vector<int>* pivot_order) {
    if (!gram.is_symmetric()) throw std::domain_error("lagrange_diagonalize: not symmetric");
    size_t n = gram.rows();
    // a custom pivot order is realized by permuting the variables up front
    QMat perm = QMat::identity(n);
    if (pivot_order) {
        if (pivot_order->size() != n) throw std::domain_error("bad pivot order");
        perm = QMat(n, n);
        for (size_t i = 0; i < n; ++i) perm.at((size_t)(*pivot_order)[i], i) = 1;
    }
    QMat m = perm.transpose() * gram * perm;
    QMat p = perm;

    // congruence column operation col_j += f * col_i applied on both sides
    auto add_col = [&](size_t j, size_t i, const Rat& f) {
        for (size_t k = 0; k < n; ++k) m.at(k, j) += f * m.at(k, i);
        for (size_t k = 0; k < n; ++k) m.at(j, k) += f * m.at(i, k);
        for (size_t k = 0; k < n; ++k) p.at(k, j) += f * p.at(k, i);
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t k = 0; k < n; ++k) std::swap(m.at(k, i), m.at(k, j));
        for (size_t k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
        for (size_t k = 0; k < n; ++k) std::swap(p.at(k, i), p.at(k, j));
    };

    for (size_t pos = 0; pos < n; ++pos) {
        if (sign(m.at(pos, pos)) == 0) {
            size_t j = pos + 1;
            while (j < n && sign(m.at(j, j)) == 0) ++j;
            if (j < n) {
                swap_cols(pos, j);
            } else {
                // all remaining diagonal entries vanish; bring in an off-diagonal one
                bool found = false;
                for (size_t a = pos; a < n && !found; ++a)
                    for (size_t b = a + 1; b < n && !found; ++b)
                        if (sign(m.at(a, b)) != 0) {
                            add_col(a, b, Rat(1));  // T_a -> T_a + T_b gives diagonal 2*m_ab
                            if (a != pos) swap_cols(pos, a);
                            found = true;
                        }
                if (!found) break;  // remaining block is zero
            }
        }
        Rat piv = m.at(pos, pos);
        for (size_t j = pos + 1; j < n; ++j) {
            if (sign(m.at(pos, j)) == 0) continue;
            add_col(j, pos, -m.at(pos, j) / piv);
        }
    }
    std::vector<Rat> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = m.at(i, i);
    if (!m.is_diagonal()) throw std::logic_error("diagonalization failed");
    return {p, d};
}

SquareClass rank4_discriminant(const QuadForm5& q, const std::vector<int>* pivot_order) {
    auto [p, d] = lagrange_diagonalize(q.gram(), pivot_order);
    int zeros = 0;
    Rat prod(1);
    for (auto& x : d) {
        if (sign(x) == 0) ++zeros;
        else prod *= x;
    }
    if (zeros != 1) throw std::domain_error("rank4_discriminant: form does not have rank 4");
    return squarefree_part(prod);
}

DiscriminantVector discriminants(const Pencil& p) {
    if (!is_nonsingular_dp4(p)) throw std::domain_error("discriminants: pencil is singular");
    SchemeSX sx = scheme_points(char_form(p));
    DiscriminantVector out;
    for (auto& s : sx.rational_points) {
        QuadForm5 member(p.member(Rat(s.mu), Rat(s.nu)));
        out.classes.push_back(rank4_discriminant(member));
    }
    out.complete = sx.is_split();
    return out;
}

std::optional<SimultaneousDiagonalization> simultaneous_diagonalize(const Pencil& p) {
    if (!is_nonsingular_dp4(p)) throw std::domain_error("simultaneous_diagonalize: singular pencil");
    SchemeSX sx = scheme_points(char_form(p));
    if (!sx.is_split()) return std::nullopt;
    QMat basis(kNumVars, kNumVars);
    for (size_t i = 0; i < sx.rational_points.size(); ++i) {
        auto& s = sx.rational_points[i];
        QMat ker = p.member(Rat(s.mu), Rat(s.nu)).kernel();
        if (ker.cols() != 1) throw std::logic_error("rank-4 member has kernel dimension != 1");
        std::vector<Rat> v(kNumVars);
        for (int k = 0; k < kNumVars; ++k) v[k] = ker.at(k, 0);
        auto w = primitive_integer_vector(v);
        for (int k = 0; k < kNumVars; ++k) basis.at(k, i) = Rat(w[k]);
    }
    if (sign(basis.det()) == 0) throw std::logic_error("cusp vectors not independent");
    QMat d1 = basis.transpose() * p.q1.gram() * basis;
    QMat d2 = basis.transpose() * p.q2.gram() * basis;
    if (!d1.is_diagonal() || !d2.is_diagonal())
        throw std::logic_error("cusp basis failed to diagonalize the pencil");
    SimultaneousDiagonalization out;
    out.basis = basis;
    for (int i = 0; i < kNumVars; ++i) out.diag.emplace_back(d1.at(i, i), d2.at(i, i));
    return out;
}

}  // namespace dp4
