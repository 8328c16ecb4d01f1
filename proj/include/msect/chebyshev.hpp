#pragma once

#include <string>
#include <vector>

#include "msect/poly.hpp"
#include "msect/rational.hpp"

namespace msect {

// T_m, U_m with the recurrence P_m = 2x P_{m-1} - P_{m-2} from seeds
// T_0 = 1, T_1 = x and U_0 = 0, U_1 = 1. With this convention
// T_m' = m U_m and T_m^2 + (1 - x^2) U_m^2 = 1.
struct ChebyshevPair {
    unsigned m = 0;
    IntPoly T;
    IntPoly U;
};

ChebyshevPair chebyshev(unsigned m);

// Same pair from the closed-form binomial double sums; used as an
// independent cross-check of the recurrence.
ChebyshevPair chebyshev_explicit(unsigned m);

// Immutable table of pairs 0..max_m, built once, safe for concurrent reads.
class ChebyshevTable {
public:
    explicit ChebyshevTable(unsigned max_m);
    const ChebyshevPair& at(unsigned m) const;

private:
    std::vector<ChebyshevPair> pairs_;
};

// |x| <= 1 and |T_m(x)| <= 1, both exact. The two flags agree for m >= 1.
struct IntervalCheck {
    bool x_in_unit = false;
    bool image_in_unit = false;
};
IntervalCheck interval_check(const Rational& x, unsigned m);

// |Re((b + i sqrt(1-b^2))^m) - T_m(b)| in doubles; a numeric smoke test of
// the angle interpretation. pre: |b| <= 1 (checked exactly).
double angle_residual(const Rational& b, unsigned m);

// Eisenstein certificate at the prime m for s T_m(x) - r, a = r/s in lowest
// terms: m | r, m^2 does not divide r, gcd(s, m) = 1. true implies
// T_m(x) - a is irreducible over Q. pre: m an odd prime (checked).
bool eisenstein_irreducible(unsigned m, const Rational& a);

// Whether every non-leading coefficient of T_m is divisible by m
// (holds whenever m is prime).
bool coeff_divisibility(unsigned m);

// Descending-power display form, e.g. "64*x^7-112*x^5+56*x^3-7*x".
std::string chebyshev_display(const IntPoly& p);

}  // namespace msect
