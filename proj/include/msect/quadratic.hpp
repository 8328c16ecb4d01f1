#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "msect/poly.hpp"
#include "msect/rational.hpp"

namespace msect {

// Q itself or a real quadratic field Q(sqrt d), d >= 2 squarefree.
struct FieldDesc {
    enum class Kind { rationals, quadratic };
    Kind kind = Kind::rationals;
    long d = 0;

    static FieldDesc rationals() { return FieldDesc{}; }
    static FieldDesc quadratic(long d);  // validates d
    static FieldDesc parse(std::string_view text);  // "Q" or "Q(sqrt 2)"

    bool is_rationals() const { return kind == Kind::rationals; }
    unsigned degree() const { return kind == Kind::rationals ? 1 : 2; }
    std::string str() const;

    friend bool operator==(const FieldDesc& a, const FieldDesc& b) = default;
};

// Element u + v sqrt(d) of a FieldDesc; over Q the invariant v = 0 holds.
class QuadElem {
public:
    QuadElem() : field_(FieldDesc::rationals()) {}
    QuadElem(Rational u, Rational v, FieldDesc field);
    static QuadElem embed(const FieldDesc& field, const Rational& r) { return {r, Rational(0), field}; }

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    const FieldDesc& field() const { return field_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_rational() const { return v_.is_zero(); }
    // sign of the real value, exact
    int sign() const;

    QuadElem conj() const { return {u_, -v_, field_}; }
    Rational norm() const;   // u^2 - d v^2 = x * conj(x)
    Rational trace() const { return u_ + u_; }
    QuadElem abs() const { return sign() < 0 ? -*this : *this; }
    QuadElem inverse() const;

    QuadElem operator-() const { return {-u_, -v_, field_}; }
    friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator/(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(const QuadElem& a, const Rational& k) { return {a.u_ * k, a.v_ * k, a.field_}; }

    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.field_ == b.field_ && a.u_ == b.u_ && a.v_ == b.v_;
    }

    double to_double() const;
    std::string str() const;
    static QuadElem parse(std::string_view text, const FieldDesc& field);

private:
    Rational u_, v_;
    FieldDesc field_;
};

// Exact comparison of real values; both sides must live in the same field.
int cmp_real(const QuadElem& a, const QuadElem& b);
int cmp_real(const QuadElem& a, const Rational& r);

struct QuadValueLess {
    bool operator()(const QuadElem& a, const QuadElem& b) const { return cmp_real(a, b) < 0; }
};

inline QuadElem scalar_in(const QuadElem& proto, const Rational& c) {
    return QuadElem::embed(proto.field(), c);
}
inline QuadElem scalar_in(const QuadElem& proto, const BigInt& c) {
    return QuadElem::embed(proto.field(), Rational(c));
}
inline const QuadElem& scalar_in(const QuadElem&, const QuadElem& c) { return c; }
inline bool coeff_is_zero(const QuadElem& c) { return c.is_zero(); }

using KPoly = Poly<QuadElem>;

inline KPoly to_kpoly(const QPoly& p, const FieldDesc& field) {
    std::vector<QuadElem> c;
    c.reserve(p.coeffs().size());
    for (const Rational& v : p.coeffs()) c.push_back(QuadElem::embed(field, v));
    return KPoly(std::move(c));
}

// Primitive integer minimal polynomial a2 x^2 + a1 x + a0, a2 > 0.
// pre: x properly quadratic.
std::array<BigInt, 3> quad_min_poly(const QuadElem& x);

// A place of the field: a real embedding (sqrt d -> +-sqrt d) or a finite
// place above a rational prime, with its local weight n_v = e_v f_v.
struct Place {
    enum class Kind { real_embedding, finite } kind = Kind::finite;
    enum class Splitting { trivial, split, inert, ramified } splitting = Splitting::trivial;
    int embedding_sign = +1;  // real embeddings
    BigInt p;                 // finite places
    int index = 0;            // distinguishes the two places over a split prime
    unsigned weight = 1;
};

std::vector<Place> archimedean_places(const FieldDesc& field);
std::vector<Place> places_above(const FieldDesc& field, const BigInt& p);

// Multiplicative height of x relative to its field: over Q it is
// max(|num|, den); over Q(sqrt d) it is a2 * sup(1,|x|) * sup(1,|x'|), the
// Mahler measure of the primitive minimal polynomial. Rationals embedded in
// a quadratic field get the square of their Q-height. Exact value plus a
// floating hint.
struct HeightValue {
    QuadElem value;
    double float_hint = 0;
};

HeightValue height_k(const QuadElem& x);

// Same height assembled literally as a product over places,
// sup(1, |x|_v^{n_v}). Oracle scope: d in {2, 3, 5, 7, 13} (or Q itself).
HeightValue places_oracle(const QuadElem& x);

// All roots of p lying in the coefficient field, ascending by real value.
// pre: p nonzero, coefficients all in one field.
std::vector<QuadElem> quad_roots(const KPoly& p, RootSearchStats* stats = nullptr);

}  // namespace msect
