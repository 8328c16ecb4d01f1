#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "msect/errors.hpp"
#include "msect/quadratic.hpp"

using namespace msect;

namespace {
const FieldDesc Q = FieldDesc::rationals();
const FieldDesc Q2 = FieldDesc::quadratic(2);
const FieldDesc Q5 = FieldDesc::quadratic(5);

QuadElem mk(long un, long ud, long vn, long vd, const FieldDesc& f) {
    return QuadElem(Rational(un, ud), Rational(vn, vd), f);
}
}  // namespace

TEST_CASE("field descriptors") {
    CHECK(Q.degree() == 1);
    CHECK(Q2.degree() == 2);
    CHECK(Q.str() == "Q");
    CHECK(Q2.str() == "Q(sqrt 2)");
    CHECK(FieldDesc::parse("Q") == Q);
    CHECK(FieldDesc::parse("Q(sqrt 13)") == FieldDesc::quadratic(13));
    CHECK_THROWS_AS(FieldDesc::quadratic(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldDesc::quadratic(12), std::invalid_argument);
    CHECK_THROWS_AS(FieldDesc::quadratic(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldDesc::quadratic(0), std::invalid_argument);
    CHECK_THROWS_AS(FieldDesc::quadratic(-3), std::invalid_argument);
    CHECK_THROWS_AS(FieldDesc::parse("Q(sqrt 8)"), std::invalid_argument);
    CHECK_THROWS_AS(FieldDesc::parse("R"), std::invalid_argument);
}

TEST_CASE("element construction") {
    CHECK_THROWS_AS(mk(1, 2, 1, 1, Q), std::invalid_argument);
    CHECK(QuadElem::embed(Q, Rational(1, 2)).is_rational());
    QuadElem x = mk(1, 2, -3, 4, Q2);
    CHECK(x.u() == Rational(1, 2));
    CHECK(x.v() == Rational(-3, 4));
    CHECK(!x.is_rational());
}

TEST_CASE("arithmetic in Q(sqrt 2)") {
    QuadElem a = mk(1, 1, 1, 1, Q2);   // 1 + sqrt2
    QuadElem b = mk(3, 1, -2, 1, Q2);  // 3 - 2 sqrt2
    CHECK((a + b) == mk(4, 1, -1, 1, Q2));
    CHECK((a - b) == mk(-2, 1, 3, 1, Q2));
    CHECK((a * b) == mk(-1, 1, 1, 1, Q2));
    CHECK(a.conj() == mk(1, 1, -1, 1, Q2));
    CHECK(a.norm() == Rational(-1));
    CHECK(a.trace() == Rational(2));
    CHECK(a * a.inverse() == QuadElem::embed(Q2, Rational(1)));
    CHECK((a / b) == (a * b.inverse()));
    CHECK_THROWS_AS(QuadElem::embed(Q2, Rational(0)).inverse(), std::invalid_argument);
    QuadElem sq2 = mk(0, 1, 1, 1, Q2);
    CHECK(sq2 * sq2 == QuadElem::embed(Q2, Rational(2)));
}

TEST_CASE("mixed fields are rejected") {
    QuadElem a = mk(1, 1, 1, 1, Q2), b = mk(1, 1, 1, 1, Q5);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(cmp_real(a, b), std::invalid_argument);
}

TEST_CASE("exact sign and order") {
    CHECK(mk(0, 1, 1, 1, Q2).sign() == 1);
    CHECK(mk(0, 1, -1, 1, Q2).sign() == -1);
    CHECK(QuadElem::embed(Q2, Rational(0)).sign() == 0);
    // 3/2 vs sqrt2: 9/4 > 2
    CHECK(cmp_real(QuadElem::embed(Q2, Rational(3, 2)), mk(0, 1, 1, 1, Q2)) > 0);
    // 7/5 vs sqrt2: 49/25 < 2
    CHECK(cmp_real(QuadElem::embed(Q2, Rational(7, 5)), mk(0, 1, 1, 1, Q2)) < 0);
    // 1 + sqrt2 against convergents from both sides
    CHECK(cmp_real(mk(1, 1, 1, 1, Q2), Rational(12, 5)) > 0);
    CHECK(cmp_real(mk(1, 1, 1, 1, Q2), Rational(29, 12)) < 0);
    CHECK(cmp_real(mk(1, 1, 1, 1, Q2), Rational(41, 17)) > 0);
    QuadElem golden = mk(1, 2, 1, 2, Q5);
    CHECK(cmp_real(golden, Rational(8, 5)) > 0);
    CHECK(cmp_real(golden, Rational(13, 8)) < 0);
    CHECK(golden.abs() == golden);
    CHECK((-golden).abs() == golden);
    // sign of an element that is numerically tiny but nonzero
    QuadElem tiny = mk(665857, 470832, -1, 1, Q2);  // 665857/470832 - sqrt2 > 0
    CHECK(tiny.sign() == 1);
}

TEST_CASE("render and parse") {
    CHECK(mk(1, 2, -3, 4, Q2).str() == "1/2-3/4*sqrt(2)");
    CHECK(mk(0, 1, 1, 2, Q5).str() == "1/2*sqrt(5)");
    CHECK(mk(-2, 1, 0, 1, Q5).str() == "-2");
    for (const char* s : {"1/2-3/4*sqrt(2)", "-1*sqrt(2)", "7", "0", "-5/3+1*sqrt(2)"}) {
        QuadElem e = QuadElem::parse(s, Q2);
        CHECK(e.str() == s);
    }
    CHECK(QuadElem::parse("3/4", Q) == QuadElem::embed(Q, Rational(3, 4)));
    CHECK_THROWS_AS(QuadElem::parse("1*sqrt(3)", Q2), std::invalid_argument);
    CHECK_THROWS_AS(QuadElem::parse("1*sqrt(2)", Q), std::invalid_argument);
    CHECK_THROWS_AS(QuadElem::parse("", Q2), std::invalid_argument);
    CHECK_THROWS_AS(QuadElem::parse("sqrt(2)", Q2), std::invalid_argument);
}

TEST_CASE("minimal polynomials") {
    // leading coefficient first
    auto golden = quad_min_poly(mk(1, 2, 1, 2, Q5));
    CHECK(golden == std::array<BigInt, 3>{1, -1, -1});
    auto root2 = quad_min_poly(mk(0, 1, 1, 1, Q2));
    CHECK(root2 == std::array<BigInt, 3>{1, 0, -2});
    auto half = quad_min_poly(mk(1, 2, 1, 2, Q2));
    CHECK(half == std::array<BigInt, 3>{4, -4, -1});
    CHECK_THROWS_AS(quad_min_poly(QuadElem::embed(Q2, Rational(-3, 4))), std::invalid_argument);
}

TEST_CASE("heights") {
    CHECK(height_k(QuadElem::embed(Q, Rational(3, 7))).value == QuadElem::embed(Q, Rational(7)));
    // rationals inside a quadratic field carry the squared height
    CHECK(height_k(QuadElem::embed(Q2, Rational(3, 7))).value == QuadElem::embed(Q2, Rational(49)));
    CHECK(height_k(mk(0, 1, 1, 1, Q2)).value == QuadElem::embed(Q2, Rational(2)));
    // golden ratio: H = phi itself
    QuadElem golden = mk(1, 2, 1, 2, Q5);
    CHECK(height_k(golden).value == golden);
    CHECK(height_k(QuadElem::embed(Q2, Rational(0))).value == QuadElem::embed(Q2, Rational(1)));
    // (1 + sqrt2)/2: min poly 4x^2 - 4x - 1, conjugate inside the unit interval
    QuadElem x = mk(1, 2, 1, 2, Q2);
    CHECK(height_k(x).value == QuadElem::embed(Q2, Rational(4)) * x);
}

TEST_CASE("height equals the product over places") {
    std::mt19937_64 rng(0x5eed04);
    for (long d : {2L, 3L, 5L, 7L, 13L}) {
        FieldDesc f = FieldDesc::quadratic(d);
        for (int i = 0; i < 150; ++i) {
            Rational u(long(rng() % 61) - 30, 1 + long(rng() % 16));
            Rational v(long(rng() % 61) - 30, 1 + long(rng() % 16));
            QuadElem x(u, v, f);
            if (x.is_zero()) continue;
            HeightValue a = height_k(x), b = places_oracle(x);
            CHECK(a.value == b.value);
            CHECK(std::fabs(a.float_hint - b.float_hint) <= 1e-6 * (1 + std::fabs(a.float_hint)));
        }
    }
}

TEST_CASE("places") {
    auto arch = archimedean_places(Q2);
    CHECK(arch.size() == 2);
    CHECK(arch[0].weight + arch[1].weight == 2);
    CHECK(places_above(Q2, BigInt(2)).size() == 1);   // ramified
    CHECK(places_above(Q2, BigInt(7)).size() == 2);   // 2 is a square mod 7
    CHECK(places_above(Q2, BigInt(5)).size() == 1);   // inert
    CHECK(places_above(Q5, BigInt(5)).size() == 1);   // ramified
    CHECK(places_above(Q5, BigInt(11)).size() == 2);  // 5 = 4^2 mod 11
    auto arch_q = archimedean_places(Q);
    CHECK(arch_q.size() == 1);
}

TEST_CASE("roots in the field, pinned cases") {
    // x^2 - x - 1 over Q(sqrt 5)
    KPoly golden(std::vector<QuadElem>{QuadElem::embed(Q5, Rational(-1)),
                                       QuadElem::embed(Q5, Rational(-1)),
                                       QuadElem::embed(Q5, Rational(1))});
    auto r = quad_roots(golden);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == mk(1, 2, -1, 2, Q5));
    CHECK(r[1] == mk(1, 2, 1, 2, Q5));

    // x^2 - 2 over Q(sqrt 2)
    KPoly p2(std::vector<QuadElem>{QuadElem::embed(Q2, Rational(-2)),
                                   QuadElem::embed(Q2, Rational(0)),
                                   QuadElem::embed(Q2, Rational(1))});
    r = quad_roots(p2);
    REQUIRE(r.size() == 2);
    CHECK(r[1] == mk(0, 1, 1, 1, Q2));

    // x^2 - 3 has no root in Q(sqrt 2)
    KPoly p3(std::vector<QuadElem>{QuadElem::embed(Q2, Rational(-3)),
                                   QuadElem::embed(Q2, Rational(0)),
                                   QuadElem::embed(Q2, Rational(1))});
    CHECK(quad_roots(p3).empty());

    // 4x^3 - 3x - 1/2 over Q(sqrt 2): the 20-degree cosine is not quadratic
    KPoly t3(std::vector<QuadElem>{QuadElem::embed(Q2, Rational(-1, 2)),
                                   QuadElem::embed(Q2, Rational(-3)),
                                   QuadElem::embed(Q2, Rational(0)),
                                   QuadElem::embed(Q2, Rational(4))});
    CHECK(quad_roots(t3).empty());

    // rational roots of a K-polynomial are found too
    KPoly lin(std::vector<QuadElem>{QuadElem::embed(Q2, Rational(-1, 2)),
                                    QuadElem::embed(Q2, Rational(1))});
    r = quad_roots(lin);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == QuadElem::embed(Q2, Rational(1, 2)));

    CHECK_THROWS_AS(quad_roots(KPoly()), std::invalid_argument);
}

TEST_CASE("roots with irrational coefficients") {
    // (x - sqrt2)(x - 3) expanded: x^2 - (3 + sqrt2) x + 3 sqrt2
    QuadElem s2 = mk(0, 1, 1, 1, Q2);
    KPoly p(std::vector<QuadElem>{s2 * QuadElem::embed(Q2, Rational(3)),
                                  -(QuadElem::embed(Q2, Rational(3)) + s2),
                                  QuadElem::embed(Q2, Rational(1))});
    auto r = quad_roots(p);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == s2);
    CHECK(r[1] == QuadElem::embed(Q2, Rational(3)));
}

TEST_CASE("roots agree with planted factors on random products") {
    std::mt19937_64 rng(0x5eed05);
    for (long d : {2L, 5L}) {
        FieldDesc f = FieldDesc::quadratic(d);
        QuadElem one = QuadElem::embed(f, Rational(1));
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<QuadElem> planted;
            KPoly p(std::vector<QuadElem>{QuadElem::embed(f, Rational(1 + long(rng() % 4)))});
            int nlin = int(rng() % 3);
            for (int i = 0; i < nlin; ++i) {
                Rational root(long(rng() % 13) - 6, 1 + long(rng() % 4));
                QuadElem r = QuadElem::embed(f, root);
                planted.push_back(r);
                p = p * KPoly(std::vector<QuadElem>{-r, one});
            }
            int nquad = int(rng() % 3);
            for (int i = 0; i < nquad; ++i) {
                Rational u(long(rng() % 9) - 4, 1 + long(rng() % 3));
                Rational v(1 + long(rng() % 8), 1 + long(rng() % 3));
                QuadElem r(u, v, f);
                planted.push_back(r);
                planted.push_back(r.conj());
                auto mp = quad_min_poly(r);  // leading first; KPoly wants ascending
                p = p * KPoly(std::vector<QuadElem>{QuadElem::embed(f, Rational(mp[2])),
                                                    QuadElem::embed(f, Rational(mp[1])),
                                                    QuadElem::embed(f, Rational(mp[0]))});
            }
            if (rng() % 2 == 0)
                p = p * KPoly(std::vector<QuadElem>{one, QuadElem::embed(f, Rational(0)), one});
            std::vector<QuadElem> expect = planted;
            std::sort(expect.begin(), expect.end(), QuadValueLess{});
            expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
            auto got = quad_roots(p);
            CHECK(got == expect);
            for (const QuadElem& r : got) CHECK(p.evaluate(r).is_zero());
        }
    }
}
