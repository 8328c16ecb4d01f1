#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "msect/bigint.hpp"
#include "msect/rational.hpp"

namespace msect {

inline bool coeff_is_zero(const BigInt& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }

// declared ahead of Poly so evaluate() finds them for non-class domains too
inline BigInt scalar_in(const BigInt&, const BigInt& c) { return c; }
inline Rational scalar_in(const Rational&, const Rational& c) { return c; }
inline Rational scalar_in(const Rational&, const BigInt& c) { return Rational(c); }

// Dense univariate polynomial, coefficients constant-first, trailing zeros
// trimmed. The zero polynomial is the empty list (degree -1).
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const T& leading() const {
        if (c_.empty()) throw std::invalid_argument("Poly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::vector<T> out(std::max(a.c_.size(), b.c_.size()), zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<T> out;
        out.reserve(c_.size());
        for (const T& v : c_) out.push_back(-v);
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    Poly scaled(const T& k) const {
        std::vector<T> out;
        out.reserve(c_.size());
        for (const T& v : c_) out.push_back(v * k);
        return Poly(std::move(out));
    }
    // multiply by x^k
    Poly shifted(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<T> out(c_.size() + k, zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    // Horner; X is the evaluation domain (the coefficient domain or an
    // extension of it). scalar_in(x, c) embeds a coefficient next to x.
    template <class X>
    X evaluate(const X& x) const {
        X acc = x - x;  // zero of the right field
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + scalar_in(x, c_[i]);
        return acc;
    }

    Poly compose(const Poly& inner) const {
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
        return acc;
    }

private:
    static T zero_like(const T& t) { return t - t; }
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using QPoly = Poly<Rational>;

inline QPoly to_qpoly(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const BigInt& v : p.coeffs()) c.emplace_back(v);
    return QPoly(std::move(c));
}

// gcd of coefficients, >= 0; content of the zero polynomial is 0.
BigInt content(const IntPoly& p);

struct ClearedPoly {
    IntPoly poly;         // primitive (content 1)
    Rational multiplier;  // positive; poly == p scaled by multiplier
};

// pre: p nonzero.
ClearedPoly clear_denominators(const QPoly& p);

// Quotient/remainder over Q. pre: divisor nonzero.
std::pair<QPoly, QPoly> divide(const QPoly& num, const QPoly& den);
std::optional<QPoly> exact_divide(const QPoly& num, const QPoly& den);

// Root-search work counters; candidates are coprime sign-normalized pairs
// drawn from divisors of the constant and leading coefficients.
struct RootSearchStats {
    std::uint64_t candidates = 0;  // pairs examined
    std::uint64_t filtered = 0;    // rejected by p(1)/p(-1) divisibility or the root bound
    std::uint64_t evaluated = 0;   // full exact evaluations
};

// All rational roots of p (multiplicity collapsed), ascending. pre: p nonzero.
std::set<Rational> rational_roots(const IntPoly& p, RootSearchStats* stats = nullptr);
std::set<Rational> rational_roots(const QPoly& p, RootSearchStats* stats = nullptr);

}  // namespace msect
