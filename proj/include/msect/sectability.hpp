#pragma once

#include <optional>
#include <vector>

#include "msect/chebyshev.hpp"
#include "msect/quadratic.hpp"

namespace msect {

// largest odd divisor. pre: m >= 1
unsigned max_odd_divisor(unsigned m);

// Verdict for "is an angle with cosine a m-sectable over the given field":
// positive verdicts carry a witness b with T_{m_odd}(b) = a, negative ones the
// exhaustion counters of the root search that ruled every candidate out.
struct SectVerdict {
    QuadElem a;
    unsigned m = 0;
    unsigned m_odd = 1;
    bool sectable = false;
    std::optional<QuadElem> witness;
    std::optional<RootSearchStats> certificate;
};

// pre: |a| <= 1 (exact). Decides whether T_{m_odd}(x) - a has a root in the
// field of a. t_modd optionally supplies a precomputed T_{m_odd}.
SectVerdict decide_sectable(const Rational& a, unsigned m, const IntPoly* t_modd = nullptr);
SectVerdict decide_sectable(const QuadElem& a, unsigned m, const IntPoly* t_modd = nullptr);

// For m = 2^k n (n odd, k >= 1, n > 1): a = T_{m/2}(1/3) is m-sectable while
// T_m(x) - a has no rational root, and nu_3(a) = 3^{m/2} multiplicatively.
struct WitnessFamily {
    unsigned m = 0, k = 0, n = 0;
    Rational a;
    ValuationResult nu3;
};
// pre: m even and not a power of two.
WitnessFamily witness_family(unsigned m);

// Floating bisection chain cos(t), cos(t/2), ..., cos(t/2^k) for cos(t) = a,
// with the doubling residual max |T_2(c_{i+1}) - c_i|. pre: |a| <= 1.
struct PowerOfTwoWitness {
    std::vector<double> chain;
    double residual = 0;
};
PowerOfTwoWitness power_of_two_witness(unsigned k, const Rational& a);

}  // namespace msect
