#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "msect/chebyshev.hpp"

using namespace msect;

namespace {
std::vector<BigInt> coeffs(std::initializer_list<long> v) {
    return std::vector<BigInt>(v.begin(), v.end());
}
}  // namespace

TEST_CASE("first kind, low degrees") {
    CHECK(chebyshev(0).T.coeffs() == coeffs({1}));
    CHECK(chebyshev(1).T.coeffs() == coeffs({0, 1}));
    CHECK(chebyshev(2).T.coeffs() == coeffs({-1, 0, 2}));
    CHECK(chebyshev(3).T.coeffs() == coeffs({0, -3, 0, 4}));
    CHECK(chebyshev(4).T.coeffs() == coeffs({1, 0, -8, 0, 8}));
    CHECK(chebyshev(5).T.coeffs() == coeffs({0, 5, 0, -20, 0, 16}));
    CHECK(chebyshev(6).T.coeffs() == coeffs({-1, 0, 18, 0, -48, 0, 32}));
    CHECK(chebyshev(7).T.coeffs() == coeffs({0, -7, 0, 56, 0, -112, 0, 64}));
}

TEST_CASE("second kind companion, low degrees") {
    CHECK(chebyshev(0).U.is_zero());
    CHECK(chebyshev(1).U.coeffs() == coeffs({1}));
    CHECK(chebyshev(2).U.coeffs() == coeffs({0, 2}));
    CHECK(chebyshev(3).U.coeffs() == coeffs({-1, 0, 4}));
    CHECK(chebyshev(4).U.coeffs() == coeffs({0, -4, 0, 8}));
    CHECK(chebyshev(5).U.coeffs() == coeffs({1, 0, -12, 0, 16}));
    CHECK(chebyshev(6).U.coeffs() == coeffs({0, 6, 0, -32, 0, 32}));
}

TEST_CASE("display strings") {
    CHECK(chebyshev_display(chebyshev(0).T) == "1");
    CHECK(chebyshev_display(chebyshev(1).T) == "x");
    CHECK(chebyshev_display(chebyshev(2).T) == "2*x^2-1");
    CHECK(chebyshev_display(chebyshev(3).T) == "4*x^3-3*x");
    CHECK(chebyshev_display(chebyshev(4).T) == "8*x^4-8*x^2+1");
    CHECK(chebyshev_display(chebyshev(5).T) == "16*x^5-20*x^3+5*x");
    CHECK(chebyshev_display(chebyshev(6).T) == "32*x^6-48*x^4+18*x^2-1");
    CHECK(chebyshev_display(chebyshev(7).T) == "64*x^7-112*x^5+56*x^3-7*x");
}

TEST_CASE("recurrence equals explicit binomial sums") {
    for (unsigned m = 0; m <= 32; ++m) {
        ChebyshevPair a = chebyshev(m), b = chebyshev_explicit(m);
        CHECK(a.T == b.T);
        CHECK(a.U == b.U);
    }
}

TEST_CASE("Pell identity") {
    QPoly one(std::vector<Rational>{1});
    QPoly x2m1(std::vector<Rational>{-1, 0, 1});
    for (unsigned m = 0; m <= 16; ++m) {
        ChebyshevPair p = chebyshev(m);
        QPoly t = to_qpoly(p.T), u = to_qpoly(p.U);
        CHECK(t * t - x2m1 * (u * u) == one);
    }
}

TEST_CASE("composition") {
    for (unsigned r = 1; r <= 6; ++r)
        for (unsigned s = 1; s <= 6; ++s) {
            if (r * s > 24) continue;
            QPoly lhs = to_qpoly(chebyshev(r * s).T);
            CHECK(lhs == to_qpoly(chebyshev(r).T).compose(to_qpoly(chebyshev(s).T)));
        }
}

TEST_CASE("parity, leading coefficient, special values") {
    for (unsigned m = 1; m <= 24; ++m) {
        const IntPoly& t = chebyshev(m).T;
        const IntPoly& u = chebyshev(m).U;
        CHECK(t.degree() == int(m));
        CHECK(u.degree() == int(m) - 1);
        CHECK(t.leading() == (BigInt(1) << (m - 1)));
        CHECK(u.leading() == (BigInt(1) << (m - 1)));
        for (int i = 0; i <= t.degree(); ++i)
            if ((unsigned(i) + m) % 2 == 1) CHECK(t[std::size_t(i)] == 0);
        for (int i = 0; i <= u.degree(); ++i)
            if ((unsigned(i) + m) % 2 == 0) CHECK(u[std::size_t(i)] == 0);
        CHECK(t.evaluate(Rational(1)) == Rational(1));
        CHECK(t.evaluate(Rational(-1)) == (m % 2 == 0 ? Rational(1) : Rational(-1)));
        CHECK(u.evaluate(Rational(1)) == Rational(long(m)));
    }
}

TEST_CASE("memo table") {
    ChebyshevTable table(12);
    for (unsigned m = 0; m <= 12; ++m) {
        CHECK(table.at(m).T == chebyshev(m).T);
        CHECK(table.at(m).U == chebyshev(m).U);
    }
    CHECK_THROWS_AS(table.at(13), std::invalid_argument);
}

TEST_CASE("unit interval is preserved both ways") {
    std::mt19937_64 rng(0x5eed02);
    for (int i = 0; i < 1000; ++i) {
        long den = 1 + long(rng() % 60);
        long num = long(rng() % (6 * std::uint64_t(den) + 1)) - 3 * den;  // |x| up to 3
        Rational x(num, den);
        unsigned m = 1 + unsigned(rng() % 12);
        IntervalCheck c = interval_check(x, m);
        CHECK(c.x_in_unit == (x.abs() <= Rational(1)));
        CHECK(c.x_in_unit == c.image_in_unit);
    }
}

TEST_CASE("angle doubling residual is numerically tiny") {
    std::mt19937_64 rng(0x5eed03);
    for (int i = 0; i < 200; ++i) {
        long den = 1 + long(rng() % 40);
        long num = long(rng() % (2 * std::uint64_t(den) + 1)) - den;
        unsigned m = 1 + unsigned(rng() % 10);
        CHECK(angle_residual(Rational(num, den), m) < 1e-9);
    }
    CHECK_THROWS_AS(angle_residual(Rational(3, 2), 4), std::invalid_argument);
}

TEST_CASE("coefficient divisibility at prime index") {
    for (unsigned m : {3u, 5u, 7u, 11u, 13u}) CHECK(coeff_divisibility(m));
    for (unsigned m : {4u, 6u, 8u, 9u, 12u}) CHECK(!coeff_divisibility(m));
}

TEST_CASE("irreducibility certificate") {
    CHECK(eisenstein_irreducible(3, Rational(3, 4)));
    CHECK(eisenstein_irreducible(3, Rational(3, 5)));
    CHECK(eisenstein_irreducible(3, Rational(6, 7)));
    CHECK(eisenstein_irreducible(5, Rational(5, 8)));
    CHECK(!eisenstein_irreducible(3, Rational(9, 10)));   // m^2 divides the numerator
    CHECK(!eisenstein_irreducible(3, Rational(1, 3)));    // denominator shares m
    CHECK(!eisenstein_irreducible(3, Rational(1, 4)));    // m misses the numerator
    CHECK_THROWS_AS(eisenstein_irreducible(4, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein_irreducible(9, Rational(1, 2)), std::invalid_argument);
}
