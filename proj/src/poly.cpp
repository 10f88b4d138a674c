#include "dp4/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dp4/arith.hpp"

namespace dp4 {

// ---------------------------------------------------------------- univariate

void UPoly::trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

const Rat& UPoly::coeff(size_t i) const {
    static const Rat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

Rat UPoly::eval(const Rat& t) const {
    Rat out(0);
    for (size_t i = c_.size(); i-- > 0;) out = out * t + c_[i];
    return out;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat((long)i);
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / c_.back());
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> s(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) s[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) s[i] += o.c_[i];
    return UPoly(std::move(s));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(Rat(-1)); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> s(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) s[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(s));
}

UPoly UPoly::scaled(const Rat& s) const {
    std::vector<Rat> v(c_);
    for (auto& x : v) x *= s;
    return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem(c_), quo;
    int dd = d.degree();
    if (degree() >= dd) quo.assign(degree() - dd + 1, Rat(0));
    for (int i = degree(); i >= dd; --i) {
        if (sign(rem[i]) == 0) continue;
        Rat f = rem[i] / d.c_.back();
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::divexact(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    if (f.degree() <= 0) return out;
    UPoly g = upoly_gcd(f, f.derivative());
    UPoly b = f.divexact(g);
    UPoly c = f.derivative().divexact(g);
    UPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UPoly a = upoly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b.divexact(a);
        c = d.divexact(a);
        d = c - b.derivative();
    }
    return out;
}

std::vector<Int> primitive_integer_coeffs(const UPoly& f) {
    if (f.is_zero()) return {};
    Int l = 1;
    for (auto& x : f.coeffs()) l = lcm(l, den(x));
    std::vector<Int> w;
    Int g = 0;
    for (auto& x : f.coeffs()) {
        w.push_back(Int(num(x) * (l / den(x))));
        g = gcd(g, w.back());
    }
    if (sign(w.back()) < 0) g = -g;
    for (auto& x : w) x /= g;
    return w;
}

static std::vector<Int> positive_divisors(const Int& n) {
    std::vector<Int> out{1};
    for (auto& [p, e] : factor(n)) {
        size_t sz = out.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::pair<Int, Int>, int>> rational_roots(const UPoly& f_in) {
    std::vector<std::pair<std::pair<Int, Int>, int>> out;
    if (f_in.degree() < 1) return out;
    std::vector<Int> c = primitive_integer_coeffs(f_in);
    // strip roots at 0
    int z = 0;
    while (sign(c[z]) == 0) ++z;
    if (z > 0) {
        out.push_back({{0, 1}, z});
        c.erase(c.begin(), c.begin() + z);
    }
    if (c.size() <= 1) return out;
    UPoly f(std::vector<Rat>(c.begin(), c.end()));
    for (const Int& p : positive_divisors(c.front()))
        for (const Int& q : positive_divisors(c.back())) {
            if (gcd(p, q) != 1) continue;
            for (int s : {1, -1}) {
                Rat r(Int(s * p), q);
                r.canonicalize();
                if (sign(f.eval(r)) != 0) continue;
                // divide out (q t - s p) with multiplicity
                UPoly lin({Rat(-s * p), Rat(q)});
                int m = 0;
                for (;;) {
                    auto [quo, rem] = f.divmod(lin);
                    if (!rem.is_zero()) break;
                    f = quo;
                    ++m;
                }
                out.push_back({{Int(s * p), q}, m});
            }
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return a.first.first * b.first.second < b.first.first * a.first.second;
              });
    return out;
}

// -------------------------------------------------------------- multivariate

MPoly MPoly::constant(const Rat& v) {
    MPoly p;
    p.add_term(Monomial{}, v);
    return p;
}

MPoly MPoly::variable(int i) {
    if (i < 0 || i >= kNumVars) throw std::domain_error("variable index out of range");
    Monomial m{};
    m[i] = 1;
    MPoly p;
    p.add_term(m, Rat(1));
    return p;
}

int MPoly::degree() const {
    int d = -1;
    for (auto& [m, v] : t_) {
        int s = 0;
        for (auto e : m) s += (int)e;
        d = std::max(d, s);
    }
    return d;
}

bool MPoly::is_homogeneous(int d) const {
    for (auto& [m, v] : t_) {
        int s = 0;
        for (auto e : m) s += (int)e;
        if (s != d) return false;
    }
    return true;
}

Rat MPoly::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rat& v) {
    if (sign(v) == 0) return;
    auto [it, fresh] = t_.emplace(m, v);
    if (!fresh) {
        it->second += v;
        if (sign(it->second) == 0) t_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly p(*this);
    for (auto& [m, v] : o.t_) p.add_term(m, v);
    return p;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly p(*this);
    for (auto& [m, v] : o.t_) p.add_term(m, -v);
    return p;
}

MPoly MPoly::operator-() const { return scaled(Rat(-1)); }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly p;
    for (auto& [m1, v1] : t_)
        for (auto& [m2, v2] : o.t_) {
            Monomial m;
            for (int i = 0; i < kNumVars; ++i) m[i] = m1[i] + m2[i];
            p.add_term(m, v1 * v2);
        }
    return p;
}

MPoly MPoly::scaled(const Rat& s) const {
    MPoly p;
    if (sign(s) == 0) return p;
    for (auto& [m, v] : t_) p.add_term(m, v * s);
    return p;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print higher-degree terms first, lexicographic within a degree
    std::vector<std::pair<Monomial, Rat>> terms(t_.begin(), t_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (auto e : a.first) da += (int)e;
        for (auto e : b.first) db += (int)e;
        if (da != db) return da > db;
        return a.first < b.first;
    });
    for (auto& [m, v] : terms) {
        Rat av = v;
        if (sign(v) < 0) {
            os << (first ? "-" : " - ");
            av = -v;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        bool allzero = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
        if (av != 1 || allzero) {
            os << to_string(av);
            if (!allzero) os << "*";
        }
        bool started = false;
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << "T" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

// ---- parser: recursive descent over + - * ^ ( ), literals, T0..T4

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return std::isdigit((unsigned char)c) || c == '(' || c == 'T' || c == 't';
    }

    MPoly parse_expr() {
        MPoly acc;
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    MPoly parse_term() {
        MPoly acc = parse_power();
        for (;;) {
            skip_ws();
            if (eat('*')) acc = acc * parse_power();
            else if (eat('/')) {
                MPoly d = parse_power();
                if (d.degree() != 0) fail("division only by constants");
                Rat dv = d.coeff(Monomial{});
                if (sign(dv) == 0) fail("division by zero");
                acc = acc.scaled(Rat(1) / dv);
            } else if (at_atom_start()) acc = acc * parse_power();  // juxtaposition
            else break;
        }
        return acc;
    }

    MPoly parse_power() {
        MPoly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) fail("expected exponent");
            int e = std::stoi(s.substr(start, pos - start));
            MPoly acc = MPoly::constant(Rat(1));
            for (int i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    MPoly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            MPoly e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-' || c == '+') {
            ++pos;
            MPoly a = parse_atom();
            return c == '-' ? -a : a;
        }
        if (c == 'T' || c == 't') {
            ++pos;
            if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected variable index");
            int i = s[pos] - '0';
            ++pos;
            if (i >= kNumVars) fail("variable index out of range");
            return MPoly::variable(i);
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            Int n(s.substr(start, pos - start));
            return MPoly::constant(Rat(n));
        }
        fail("unexpected character");
    }
};

}  // namespace

MPoly parse_poly(const std::string& text) {
    Parser p(text);
    MPoly e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

MPoly LinForm::poly() const {
    MPoly p;
    for (int i = 0; i < kNumVars; ++i) {
        Monomial m{};
        m[i] = 1;
        p.add_term(m, c[i]);
    }
    return p;
}

bool LinForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return sign(x) == 0; });
}

LinForm to_linform(const MPoly& p) {
    if (!p.is_zero() && !p.is_homogeneous(1))
        throw std::domain_error("expected a homogeneous linear form");
    LinForm l;
    for (int i = 0; i < kNumVars; ++i) {
        Monomial m{};
        m[i] = 1;
        l.c[i] = p.coeff(m);
    }
    return l;
}

}  // namespace dp4
