#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "msect/bigint.hpp"

namespace msect {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over mpq_class that pins down normalization,
// text form, and the handful of number-theoretic accessors the rest of the
// library needs.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                       // NOLINT: implicit by design
    Rational(const BigInt& n) : q_(n) {}              // NOLINT
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);

    static Rational parse(std::string_view text);     // "p/q" or "p"

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational pow(long e) const;

    double to_double() const { return q_.get_d(); }

    // Canonical text: "p" for integers, "p/q" otherwise; parse accepts both.
    std::string str() const;
    // Always "p/q", the form used in CSV cells.
    std::string str_slash() const;

private:
    mpq_class q_;  // invariant: canonicalized
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// q-adic valuation of a rational, stored additively. The multiplicative value
// q^(-exponent) is what the height machinery consumes; input 0 is a
// distinguished case with no multiplicative value.
struct ValuationResult {
    BigInt prime;
    bool zero_input = false;
    long exponent = 0;  // 0 when zero_input

    std::optional<Rational> multiplicative() const;
    // nu <= 1 in the multiplicative reading; zero input reports true.
    bool leq_one() const { return zero_input || exponent >= 0; }
    bool gt_one() const { return !leq_one(); }
};

// pre: q prime (checked; composite q rejected).
ValuationResult valuation(const Rational& x, const BigInt& q);

// H(p/q) = max(|p|, q); always an integer >= 1.
BigInt height_q(const Rational& x);

}  // namespace msect
