#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dp4/pencil.hpp"
#include "testutil.hpp"

using namespace dp4;

namespace {

Pencil example12() {
    QuadForm5 q1(parse_poly("T0*T1 - T2^2 - 7*T3^2"));
    QuadForm5 q2(parse_poly("(T0 - 4*T1)*(T0 - 6*T1) - T2^2 - 7*T4^2"));
    return {q1, q2};
}

Pencil s43() {
    QuadForm5 q1(parse_poly("-(T0 - T1)*(T0 + T1) - T3^2 + 17*T4^2"));
    QuadForm5 q2(parse_poly("-103*(T0 - T2)*(T0 + T2) - T3^2 + 68*T4^2"));
    return {q1, q2};
}

Pencil diagonal(const std::vector<long>& a, const std::vector<long>& b) {
    QMat g1(5, 5), g2(5, 5);
    for (int i = 0; i < 5; ++i) {
        g1.at(i, i) = Rat(a[i]);
        g2.at(i, i) = Rat(b[i]);
    }
    return {QuadForm5(g1), QuadForm5(g2)};
}

std::vector<Int> class_multiset(const DiscriminantVector& d) {
    std::vector<Int> v;
    for (auto& c : d.classes) v.push_back(c.value());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("QuadForm5 representations agree") {
    MPoly p = parse_poly("3*T0^2 - 2*T0*T1 + T4^2 + 1/2*T2*T3");
    QuadForm5 q(p);
    CHECK(q.poly() == p);
    CHECK(QuadForm5::from_coeffs(q.coeffs15()) == q);
    std::vector<Int> x{1, 2, 3, 4, 5};
    CHECK(q.eval(x) == Rat(3 - 4 + 25 + 6));
    CHECK_THROWS(QuadForm5(parse_poly("T0^2 + T1")));
}

TEST_CASE("char_form of a diagonal pencil is the product of linear factors") {
    Pencil p = diagonal({1, 2, 3, 4, 5}, {1, 1, 2, 2, 7});
    CharQuintic c = char_form(p);
    // det(mu M1 + nu M2) = prod (a_i mu + b_i nu); compare at several points
    for (long t = -3; t <= 3; ++t) {
        Rat expect(1);
        std::vector<long> a{1, 2, 3, 4, 5}, b{1, 1, 2, 2, 7};
        for (int i = 0; i < 5; ++i) expect *= Rat(a[i] * t + b[i]);
        CHECK(c.eval(Rat(t), Rat(1)) == expect);
    }
}

TEST_CASE("char_form rejects degenerate pencils") {
    QMat g(5, 5);
    g.at(0, 0) = 1;
    Pencil p{QuadForm5(g), QuadForm5(g.scaled(Rat(2)))};
    CHECK_THROWS_AS(char_form(p), ConeOrDegenerateError);
}

TEST_CASE("is_cone") {
    QMat g(5, 5);
    for (int i = 0; i < 4; ++i) g.at(i, i) = 1;
    Pencil cone{QuadForm5(g), QuadForm5(g)};
    CHECK(is_cone(cone));
    CHECK_FALSE(is_cone(example12()));
    CHECK_FALSE(is_cone(diagonal({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1})));
}

TEST_CASE("Example 1.2 scheme: three rational points and a class-6 quadratic point") {
    Pencil p = example12();
    CHECK_FALSE(is_cone(p));
    CHECK(is_nonsingular_dp4(p));
    SchemeSX sx = scheme_points(char_form(p));
    REQUIRE(sx.rational_points.size() == 3);
    REQUIRE(sx.quadratic_factors.size() == 1);
    CHECK(sx.residuals.empty());
    CHECK(sx.reduced);
    CHECK_FALSE(sx.is_split());
    CHECK(sx.quadratic_factors[0].disc == squarefree_part(Int(6)));
    for (auto& s : sx.rational_points) CHECK(s.multiplicity == 1);
    CHECK(sx.rational_points[0].is_infinity());
}

TEST_CASE("Example 1.2 rank-4 discriminants are {1, -7, -7}") {
    DiscriminantVector d = discriminants(example12());
    CHECK_FALSE(d.complete);
    CHECK(class_multiset(d) == std::vector<Int>{-7, -7, 1});
}

TEST_CASE("Example 1.2 is not diagonalizable over Q") {
    CHECK_FALSE(simultaneous_diagonalize(example12()).has_value());
}

TEST_CASE("s4.3 example: split scheme with discriminants {17,17,66,206,3399}") {
    Pencil p = s43();
    CHECK(is_nonsingular_dp4(p));
    SchemeSX sx = scheme_points(char_form(p));
    CHECK(sx.is_split());
    REQUIRE(sx.rational_points.size() == 5);
    DiscriminantVector d = discriminants(p);
    CHECK(d.complete);
    CHECK(class_multiset(d) == std::vector<Int>{17, 17, 66, 206, 3399});
    CHECK(d.product().is_trivial());

    auto sd = simultaneous_diagonalize(p);
    REQUIRE(sd.has_value());
    // the basis columns diagonalize both forms simultaneously
    QMat d1 = sd->basis.transpose() * p.q1.gram() * sd->basis;
    QMat d2 = sd->basis.transpose() * p.q2.gram() * sd->basis;
    CHECK(d1.is_diagonal());
    CHECK(d2.is_diagonal());
    for (int i = 0; i < 5; ++i) {
        CHECK(d1.at(i, i) == sd->diag[i].first);
        CHECK(d2.at(i, i) == sd->diag[i].second);
    }
}

TEST_CASE("scheme multiplicities: (mu-nu)^2 times a cubic is not reduced") {
    // f(t) = (t-1)^2 (t^3 + 2)
    CharQuintic c{{Rat(2), Rat(-4), Rat(2), Rat(1), Rat(-2), Rat(1)}};
    SchemeSX sx = scheme_points(c);
    REQUIRE(sx.rational_points.size() == 1);
    CHECK(sx.rational_points[0].mu == 1);
    CHECK(sx.rational_points[0].nu == 1);
    CHECK(sx.rational_points[0].multiplicity == 2);
    REQUIRE(sx.residuals.size() == 1);
    CHECK(sx.residuals[0].coeffs.size() == 4);
    CHECK_FALSE(sx.reduced);
    CHECK(sx.degree() == 5);
}

TEST_CASE("rank_at") {
    Pencil p = s43();
    SchemeSX sx = scheme_points(char_form(p));
    for (auto& s : sx.rational_points) CHECK(rank_at(p, s) == 4);
    CHECK_THROWS_AS(rank_at(p, SchemePoint{Int(7), Int(5), 1}), std::domain_error);

    // pencil with a double root at infinity carries a rank-3 member there
    Pencil dbl = diagonal({0, 0, 1, 1, 1}, {1, 1, 1, 2, 3});
    SchemeSX sd = scheme_points(char_form(dbl));
    REQUIRE(sd.rational_points.size() >= 1);
    CHECK(sd.rational_points[0].is_infinity());
    CHECK(sd.rational_points[0].multiplicity == 2);
    CHECK_FALSE(sd.reduced);
    CHECK(rank_at(dbl, sd.rational_points[0]) == 3);
    CHECK_FALSE(is_nonsingular_dp4(dbl));
}

TEST_CASE("rank4_discriminant basics") {
    QMat g(5, 5);
    for (int i = 0; i < 4; ++i) g.at(i, i) = 1;
    CHECK(rank4_discriminant(QuadForm5(g)).is_trivial());
    g.at(4, 4) = 1;
    CHECK_THROWS_AS(rank4_discriminant(QuadForm5(g)), std::domain_error);
}

TEST_CASE("rank4_discriminant is independent of the pivot order") {
    auto g = testutil::rng(11);
    Pencil p = s43();
    SchemeSX sx = scheme_points(char_form(p));
    std::vector<int> order{0, 1, 2, 3, 4};
    for (auto& s : sx.rational_points) {
        QuadForm5 member(p.member(Rat(s.mu), Rat(s.nu)));
        SquareClass base = rank4_discriminant(member);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(order.begin(), order.end(), g);
            CHECK(rank4_discriminant(member, &order) == base);
        }
    }
}

TEST_CASE("Fact 3.3: product of the five discriminants of a diagonal pencil is a square") {
    auto g = testutil::rng(12);
    for (int i = 0; i < 100; ++i) {
        Pencil p = testutil::random_diagonal_pencil(g);
        DiscriminantVector d = discriminants(p);
        REQUIRE(d.complete);
        CHECK(d.product().is_trivial());
    }
}

TEST_CASE("pencil basis-change invariance") {
    auto g = testutil::rng(13);
    for (int i = 0; i < 50; ++i) {
        Pencil p = (i % 2) ? s43() : testutil::random_diagonal_pencil(g);
        QMat m = testutil::random_invertible(g, 2);
        QuadForm5 r1(p.q1.gram().scaled(m.at(0, 0)) + p.q2.gram().scaled(m.at(0, 1)));
        QuadForm5 r2(p.q1.gram().scaled(m.at(1, 0)) + p.q2.gram().scaled(m.at(1, 1)));
        Pencil q{r1, r2};
        CHECK(is_nonsingular_dp4(q));
        CHECK(class_multiset(discriminants(q)) == class_multiset(discriminants(p)));
        SchemeSX sp = scheme_points(char_form(p)), sq = scheme_points(char_form(q));
        CHECK(sp.rational_points.size() == sq.rational_points.size());
        CHECK(sp.quadratic_factors.size() == sq.quadratic_factors.size());
    }
}

TEST_CASE("pencil coordinate-change invariance") {
    auto g = testutil::rng(14);
    for (int i = 0; i < 50; ++i) {
        Pencil p = (i % 3 == 0) ? example12() : testutil::random_diagonal_pencil(g);
        QMat m = testutil::random_invertible(g, 5);
        Pencil q{QuadForm5(m.transpose() * p.q1.gram() * m),
                 QuadForm5(m.transpose() * p.q2.gram() * m)};
        SchemeSX sp = scheme_points(char_form(p)), sq = scheme_points(char_form(q));
        CHECK(sp.rational_points == sq.rational_points);
        DiscriminantVector dp = discriminants(p), dq = discriminants(q);
        CHECK(dp.complete == dq.complete);
        REQUIRE(dp.classes.size() == dq.classes.size());
        for (size_t k = 0; k < dp.classes.size(); ++k) CHECK(dp.classes[k] == dq.classes[k]);
    }
}

TEST_CASE("simultaneous_diagonalize recovers a diagonal model") {
    Pencil p = diagonal({1, -2, 3, 4, -5}, {2, 1, -1, 1, 1});
    auto sd = simultaneous_diagonalize(p);
    REQUIRE(sd.has_value());
    // on an already-diagonal pencil the cusp basis is a scaled permutation
    for (int j = 0; j < 5; ++j) {
        int nonzero = 0;
        for (int i = 0; i < 5; ++i)
            if (sign(sd->basis.at(i, j)) != 0) ++nonzero;
        CHECK(nonzero == 1);
    }
}

TEST_CASE("scheme point ordering is deterministic") {
    Pencil p = s43();
    SchemeSX sx = scheme_points(char_form(p));
    REQUIRE(sx.rational_points.size() == 5);
    CHECK(sx.rational_points[0].is_infinity());
    // finite points ascending by mu/nu: -103, -4, -1, 0
    std::vector<long> expect{-103, -4, -1, 0};
    for (int i = 1; i < 5; ++i) {
        CHECK(sx.rational_points[i].nu == 1);
        CHECK(sx.rational_points[i].mu == expect[i - 1]);
    }
}
