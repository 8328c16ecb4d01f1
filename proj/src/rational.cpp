#include "msect/rational.hpp"

#include <ostream>

#include "msect/factor.hpp"

namespace msect {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw std::invalid_argument("Rational::parse: bad integer '" + std::string(text) + "'");
        return Rational(BigInt(std::string(text)), BigInt(1));
    }
    std::string_view ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) throw std::invalid_argument("Rational::parse: bad rational '" + std::string(text) + "'");
    BigInt den{std::string(ds)};
    if (sgn(den) == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(BigInt(std::string(ns)), den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(1 / q_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, acc = 1;
    long n = e;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
}

std::string Rational::str_slash() const {
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> ValuationResult::multiplicative() const {
    if (zero_input) return std::nullopt;
    return Rational(prime).pow(-exponent);
}

ValuationResult valuation(const Rational& x, const BigInt& q) {
    if (q < 2 || !is_prime(q)) throw std::invalid_argument("valuation: q must be prime");
    ValuationResult out;
    out.prime = q;
    if (x.is_zero()) {
        out.zero_input = true;
        return out;
    }
    long e = 0;
    BigInt n = x.num();
    while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
        ++e;
    }
    if (e == 0) {
        BigInt d = x.den();
        while (mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t())) {
            mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
            --e;
        }
    }
    out.exponent = e;
    return out;
}

BigInt height_q(const Rational& x) {
    BigInt n = abs(x.num()), d = x.den();
    return n > d ? n : d;
}

}  // namespace msect
