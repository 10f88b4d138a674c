#include "dp4/brauer.hpp"

#include <algorithm>
#include <sstream>

namespace dp4 {

QuadForm5 SDPresentation::form(int i) const {
    const auto& r = (i == 1) ? row1 : row2;
    Rat d = (i == 1) ? D : D * scale * scale;
    MPoly p = r[0].poly() * r[1].poly() - r[2].poly() * r[2].poly() +
              r[3].poly() * r[3].poly().scaled(d);
    return QuadForm5(p);
}

void SDPresentation::validate() const {
    if (is_square(D)) throw std::domain_error("SD presentation: D is a square");
    if (sign(scale) == 0) throw std::domain_error("SD presentation: zero scale");
    for (int i = 1; i <= 2; ++i) {
        const auto& r = (i == 1) ? row1 : row2;
        QMat coeffs(4, kNumVars);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < kNumVars; ++b) coeffs.at(a, b) = r[a].c[b];
        if (coeffs.rank() != 4)
            throw std::domain_error("SD presentation: row forms not linearly independent");
        if (form(i).rank() != 4)
            throw std::domain_error("SD presentation: defining form does not have rank 4");
    }
}

SDPresentation build_presentation_family(const Rat& D, const Rat& A1, const Rat& A2,
                                         const Rat& B) {
    if (sign(D) == 0 || sign(A1) == 0 || sign(A2) == 0 || sign(B) == 0)
        throw std::domain_error("family parameters must be nonzero");
    if (is_square(D)) throw std::domain_error("family presentation needs a non-square D");
    auto T = [](int i) { return to_linform(MPoly::variable(i)); };
    SDPresentation sd;
    sd.D = D;
    sd.scale = B;
    // sign convention: -A_i is folded into l_i1
    LinForm l11, l21;
    for (int k = 0; k < kNumVars; ++k) {
        l11.c[k] = (k == 0) ? -A1 : (k == 1 ? A1 : Rat(0));
        l21.c[k] = (k == 0) ? -A2 : (k == 2 ? A2 : Rat(0));
    }
    LinForm l12 = to_linform(MPoly::variable(0) + MPoly::variable(1));
    LinForm l22 = to_linform(MPoly::variable(0) + MPoly::variable(2));
    sd.row1 = {l11, l12, T(3), T(4)};
    sd.row2 = {l21, l22, T(3), T(4)};
    sd.validate();
    return sd;
}

SignAutomorphism SignAutomorphism::canonical() const {
    SignAutomorphism s(*this);
    if (s.flips[0])
        for (auto& f : s.flips) f = !f;
    return s;
}

bool SignAutomorphism::is_identity() const {
    SignAutomorphism s = canonical();
    return std::none_of(s.flips.begin(), s.flips.end(), [](bool f) { return f; });
}

std::vector<Int> SignAutomorphism::apply(const std::vector<Int>& x) const {
    if (x.size() != 5) throw std::domain_error("need 5 coordinates");
    std::vector<Int> y(x);
    for (int i = 0; i < 5; ++i)
        if (flips[i]) y[i] = -y[i];
    return y;
}

std::vector<SignAutomorphism> SignAutomorphism::all16() {
    std::vector<SignAutomorphism> out;
    for (int mask = 0; mask < 16; ++mask) {
        SignAutomorphism s;
        for (int i = 0; i < 4; ++i) s.flips[i + 1] = (mask >> i) & 1;
        out.push_back(s);
    }
    return out;
}

EvalValue eval_at_rational_point(const BrauerClassRep& c, const std::vector<Int>& x,
                                 const Place& v, std::pair<int, int> choice) {
    const auto& sd = c.presentation;
    if (sign(sd.form(1).eval(x)) != 0 || sign(sd.form(2).eval(x)) != 0)
        throw std::domain_error("point does not lie on the surface");
    Rat n = sd.row1[choice.first - 1].eval(x);
    Rat d = sd.row2[choice.second - 1].eval(x);
    if (sign(n) == 0 || sign(d) == 0) throw IndeterminateEval();
    return hilbert(n / d, sd.D, v) == 1 ? EvalValue::Zero : EvalValue::Half;
}

EvalValue eval_at_rational_point(const BrauerClassRep& c, const std::vector<Int>& x,
                                 const Place& v) {
    // try the default choice first, then the other three
    std::vector<std::pair<int, int>> choices{c.quotient_choice};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            if (std::make_pair(i, j) != c.quotient_choice) choices.push_back({i, j});
    for (auto& ch : choices) {
        try {
            return eval_at_rational_point(c, x, v, ch);
        } catch (const IndeterminateEval&) {
        }
    }
    throw IndeterminateEval();
}

// ---- Brauer group over F_2 ----

namespace {

// primes (with -1 for the sign) appearing in a squarefree integer
std::vector<Int> class_support(const SquareClass& c) {
    std::vector<Int> out;
    if (sign(c.value()) < 0) out.push_back(-1);
    if (dp4::abs(c.value()) > 1)
        for (auto& [p, e] : factor(c.value())) out.push_back(p);
    return out;
}

int vec_weight(unsigned v) {
    int w = 0;
    while (v) {
        w += v & 1;
        v >>= 1;
    }
    return w;
}

}  // namespace

BrauerGroupInfo br_group_diagonal(const DiscriminantVector& d) {
    if (!d.complete || d.classes.size() != 5)
        throw std::domain_error("br_group_diagonal needs all five discriminant classes");
    if (!d.product().is_trivial())
        throw std::domain_error("discriminant product is not a square");

    std::vector<Int> basis;
    for (auto& c : d.classes)
        for (auto& p : class_support(c))
            if (std::find(basis.begin(), basis.end(), p) == basis.end()) basis.push_back(p);

    // kernel of o: (Z/2)^5 -> Q*/Q*^2 by exhaustive scan of the 32 vectors
    auto in_kernel = [&](unsigned v) {
        for (auto& p : basis) {
            int parity = 0;
            for (int i = 0; i < 5; ++i) {
                if (!((v >> i) & 1)) continue;
                auto s = class_support(d.classes[i]);
                if (std::find(s.begin(), s.end(), p) != s.end()) parity ^= 1;
            }
            if (parity) return false;
        }
        return true;
    };
    std::vector<unsigned> kernel;
    for (unsigned v = 0; v < 32; ++v)
        if (in_kernel(v)) kernel.push_back(v);

    // T = span{(1,...,1)} + {e_i : D_i trivial}
    std::vector<unsigned> tgens{31u};
    for (int i = 0; i < 5; ++i)
        if (d.classes[i].is_trivial()) tgens.push_back(1u << i);
    std::vector<unsigned> tspan{0};
    for (unsigned g : tgens) {
        std::vector<unsigned> next(tspan);
        for (unsigned t : tspan)
            if (std::find(tspan.begin(), tspan.end(), t ^ g) == tspan.end()) next.push_back(t ^ g);
        tspan = std::move(next);
    }
    for (unsigned t : tspan)
        if (!in_kernel(t)) throw std::logic_error("T is not contained in ker(o)");

    size_t cosets = kernel.size() / tspan.size();
    int rank = 0;
    while ((1u << rank) < cosets) ++rank;

    // one weight-2 representative per nontrivial coset
    BrauerGroupInfo out;
    out.rank = rank;
    std::vector<unsigned> seen{0};
    auto already_covered = [&](unsigned v) {
        for (unsigned s : seen)
            if (std::find(tspan.begin(), tspan.end(), v ^ s) != tspan.end()) return true;
        return false;
    };
    for (unsigned v : kernel) {
        if (vec_weight(v) != 2 || already_covered(v)) continue;
        int i = -1, j = -1;
        for (int b = 0; b < 5; ++b)
            if ((v >> b) & 1) (i < 0 ? i : j) = b;
        out.generator_pairs.emplace_back(i, j);
        seen.push_back(v);
    }
    if ((int)out.generator_pairs.size() != (1 << rank) - 1)
        throw std::logic_error("missing weight-2 coset representatives");
    return out;
}

bool order4_criterion(const Pencil& p) {
    SchemeSX sx = scheme_points(char_form(p));
    std::vector<SquareClass> classes;
    for (auto& s : sx.rational_points)
        classes.push_back(rank4_discriminant(QuadForm5(p.member(Rat(s.mu), Rat(s.nu)))));
    for (size_t a = 0; a < classes.size(); ++a) {
        if (classes[a].is_trivial()) continue;
        int count = 0;
        for (auto& c : classes)
            if (c == classes[a]) ++count;
        if (count >= 3) return true;
    }
    return false;
}

bool triviality_criterion(const DiscriminantVector& d, size_t i, size_t j) {
    if (!d.complete || d.classes.size() != 5)
        throw std::domain_error("triviality_criterion needs all five classes");
    if (i == j || i >= 5 || j >= 5) throw std::domain_error("bad index pair");
    if (d.classes[i] != d.classes[j] || d.classes[i].is_trivial())
        throw std::domain_error("chosen classes must agree and be non-square");
    for (size_t k = 0; k < 5; ++k)
        if (k != i && k != j && !d.classes[k].is_trivial()) return false;
    return true;
}

bool place_splits_in(const SquareClass& D, const Place& v) {
    const Int& d = D.value();
    if (d == 1) throw std::domain_error("Q(sqrt(D)) needs a non-square D");
    if (v.is_infinite()) return sign(d) > 0;
    const Int& p = v.prime();
    if (mod_floor(d, p) == 0) return false;  // ramified
    if (p == 2) return mod_floor(d, 8) == 1;
    return legendre(d, p) == 1;
}

// rank of the Gram matrix over F_p, odd p (entries have denominator 1 or 2)
static int gram_rank_mod_p(const QMat& gram, const Int& p) {
    int n = (int)gram.rows();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& x = gram.at(i, j);
            Int dnm = mod_floor(den(x), p);
            if (sign(dnm) == 0) throw std::domain_error("denominator not invertible mod p");
            m[i][j] = mod_floor(num(x) * inv_mod(dnm, p), p);
        }
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (sign(m[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        Int inv = inv_mod(m[rank][c], p);
        for (int r = rank + 1; r < n; ++r) {
            if (sign(m[r][c]) == 0) continue;
            Int f = mod_floor(m[r][c] * inv, p);
            for (int k = c; k < n; ++k) m[r][k] = mod_floor(m[r][k] - f * m[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

// primitive integral rescaling: integer polynomial coefficients, content 1
static QuadForm5 primitive_model(const QuadForm5& q) {
    MPoly p = q.poly();
    Int l = 1;
    for (auto& [m, v] : p.terms()) l = lcm(l, den(v));
    Int g = 0;
    for (auto& [m, v] : p.terms()) g = gcd(g, Int(num(v) * (l / den(v))));
    return QuadForm5(p.scaled(Rat(l) / Rat(g)));
}

std::optional<ConstancyCertificate> constancy_certificate(
    const BrauerClassRep& c, const Place& v, const std::optional<FamilyParams>& params) {
    const SDPresentation& sd = c.presentation;
    SquareClass D = sd.disc_class();

    // (i) good reduction: both forms keep rank 4 mod p (stated for p != 2 only)
    if (v.is_finite() && v.prime() != 2) {
        const Int& p = v.prime();
        bool ok = true;
        for (int i = 1; i <= 2 && ok; ++i)
            ok = gram_rank_mod_p(primitive_model(sd.form(i)).gram(), p) == 4;
        if (ok)
            return ConstancyCertificate{ConstancyCertificate::Kind::GoodReduction,
                                        "both forms have rank 4 mod " + p.get_str()};
    }
    // (ii) split place, including D > 0 at infinity
    if (place_splits_in(D, v))
        return ConstancyCertificate{
            ConstancyCertificate::Kind::Split,
            v.is_infinite() ? "D > 0 at the real place"
                            : v.str() + " splits in Q(sqrt(" + D.value().get_str() + "))"};
    // (iii) ramified prime with the family congruences
    if (params && v.is_finite() && v.prime() != 2) {
        const Int& p = v.prime();
        const FamilyParams& fp = *params;
        bool sf = true;
        for (auto& [q, e] : factor(fp.D))
            if (e > 1) sf = false;
        if (sf && mod_floor(fp.D, p) == 0 && gcd(fp.B, fp.D) == 1 &&
            legendre(Int(-fp.A1), p) == 1 && mod_floor(Int(fp.A1 - fp.A2), p) == 0) {
            std::ostringstream os;
            os << "p | D with (-A1/p) = 1 and A1 = A2 (mod " << p.get_str() << ")";
            return ConstancyCertificate{ConstancyCertificate::Kind::RamifiedCongruence, os.str()};
        }
    }
    return std::nullopt;
}

WitnessComponent witness_components(const BrauerClassRep& c, const FamilyParams& params,
                                    const SignAutomorphism& sigma) {
    // only the T1 and T2 flips (mod global flip) move the defining quotient;
    // T3 and T4 enter the rows through squares, so their flips act trivially
    SignAutomorphism s = sigma.canonical();
    Rat mult(1);
    if (s.flips[1]) mult *= Rat(-params.A1);
    if (s.flips[2]) mult *= Rat(-params.A2);
    WitnessComponent out;
    out.multiplier = squarefree_part(mult);
    if (!out.multiplier.is_trivial())
        out.components = hilbert_support(Rat(out.multiplier.value()), c.presentation.D);
    if (out.components.size() % 2 != 0) throw std::logic_error("odd witness support");
    return out;
}

std::optional<WitnessProof> nonconstancy_by_witness(const BrauerClassRep& c,
                                                    const FamilyParams& params, const Place& v) {
    // candidate generators: flip T1, flip T2, flip both
    std::vector<SignAutomorphism> gens;
    for (int mask = 1; mask < 4; ++mask) {
        SignAutomorphism s;
        s.flips[1] = mask & 1;
        s.flips[2] = (mask >> 1) & 1;
        gens.push_back(s);
    }
    for (auto& s : gens) {
        WitnessComponent w = witness_components(c, params, s);
        if (!w.components.contains(v)) continue;
        // point existence (B.d): x0 = 1, x4 = 0, x3 = t small makes
        // x1^2 = 1 + t^2/A1 and x2^2 = 1 + t^2/A2 local squares
        Rat A1(params.A1), A2(params.A2);
        if (v.is_infinite()) {
            Int n = dp4::abs(params.A1 * params.A2) + 2;
            Rat t = Rat(1) / Rat(n);
            if (sign(1 + t * t / A1) > 0 && sign(1 + t * t / A2) > 0)
                return WitnessProof{s, w.multiplier, t};
            continue;
        }
        for (unsigned long k = 1; k <= 64; ++k) {
            Rat t(pow_int(v.prime(), k));
            Rat e1 = 1 + t * t / A1, e2 = 1 + t * t / A2;
            if (sign(e1) != 0 && sign(e2) != 0 && is_local_square(e1, v) &&
                is_local_square(e2, v))
                return WitnessProof{s, w.multiplier, t};
        }
    }
    return std::nullopt;
}

}  // namespace dp4
