#include "msect/poly.hpp"

namespace msect {

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const BigInt& c : p.coeffs()) g = gcd(g, c);
    return abs(g);
}

ClearedPoly clear_denominators(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("clear_denominators: zero polynomial");
    BigInt l = 1;
    for (const Rational& c : p.coeffs()) l = lcm(l, c.den());
    std::vector<BigInt> ints;
    ints.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) ints.push_back(c.num() * (l / c.den()));
    BigInt g = 0;
    for (const BigInt& c : ints) g = gcd(g, c);
    g = abs(g);
    for (BigInt& c : ints) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return {IntPoly(std::move(ints)), Rational(l, g)};
}

std::pair<QPoly, QPoly> divide(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("divide: zero divisor");
    QPoly rem = num;
    if (num.degree() < den.degree()) return {QPoly(), rem};
    std::vector<Rational> q(num.degree() - den.degree() + 1, Rational(0));
    Rational lead = den.leading();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int k = rem.degree() - den.degree();
        Rational f = rem.leading() / lead;
        q[k] = f;
        rem = rem - den.scaled(f).shifted(k);
    }
    return {QPoly(std::move(q)), rem};
}

std::optional<QPoly> exact_divide(const QPoly& num, const QPoly& den) {
    auto [q, r] = divide(num, den);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

}  // namespace msect
