#pragma once

#include <cstdint>
#include <vector>

#include "msect/census.hpp"
#include "msect/sectability.hpp"

namespace msect {

// How to count m-sectable cosines of height <= B inside [-1, 1]:
//   per_element  decides T_{m_odd}(x) = a for each census element a,
//   forward_image collects heights of T_{m_odd}(b) over a certified preimage
//                 ball and counts the distinct images that land under B,
//   both         runs the two and insists they agree.
enum class CountMethod { per_element, forward_image, both };

// Integer radius R certified so that every b in the field with T_{m_odd}(b) = a,
// |a| <= 1 and H(a) <= B satisfies H(b) <= R. Over Q: R = floor((B 2^m)^{1/m}),
// exact because rational heights are integers; over a quadratic field heights
// are real, so the certified bound (B 4^m)^{1/m} is rounded up (m = m_odd).
// docs/enumeration.md derives both budgets.
BigInt preimage_radius_q(const Rational& bound, unsigned m_odd);
BigInt preimage_radius_quad(const Rational& bound, unsigned m_odd);

std::uint64_t msect_count(const FieldDesc& field, unsigned m, const Rational& bound,
                          CountMethod method = CountMethod::both, unsigned shards = 1);

struct DensityRecord {
    FieldDesc field;
    unsigned m = 0, m_odd = 1;
    Rational bound;
    std::uint64_t numerator = 0;    // m-sectable elements with |a| <= 1, H <= B
    std::uint64_t denominator = 0;  // census in-unit count
    Rational delta;                 // numerator / denominator, exact
    double delta_float = 0;
};

DensityRecord density(const FieldDesc& field, unsigned m, const Rational& bound,
                      CountMethod method = CountMethod::both, unsigned shards = 1);

// Least-squares slope of log delta against log B over the records with a
// nonzero numerator, against the predicted exponent 2/m_odd - 2.
struct DecayFit {
    double fitted_slope = 0;
    double intercept = 0;
    double theoretical_slope = 0;
    unsigned points_used = 0;
};
// pre: at least two usable records, all sharing one field and one m.
DecayFit decay_fit(const std::vector<DensityRecord>& records);

}  // namespace msect
