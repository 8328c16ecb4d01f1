#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msect/quadratic.hpp"

namespace msect {

// All field elements of height at most B, ordered by (height, value) and
// deduplicated. Over Q the height is max(|p|, q); over a real quadratic field
// it is the Mahler-style height returned by height_k.
std::vector<Rational> enumerate_q(const Rational& bound);
std::vector<QuadElem> enumerate_field(const FieldDesc& field, const Rational& bound,
                                      unsigned shards = 1);

struct CensusRow {
    FieldDesc field;
    Rational bound;
    std::uint64_t total = 0;    // elements with H <= B
    std::uint64_t in_unit = 0;  // those with |x| <= 1
};

// Counts the census and checks in_unit == (total + 3) / 2, which holds because
// x -> 1/x is a height-preserving involution pairing |x| > 1 with |x| < 1 and
// fixing {-1, 0, 1} (0 paired with nothing; heights of x and 1/x agree).
CensusRow census(const FieldDesc& field, const Rational& bound, unsigned shards = 1);

struct SchanuelFit {
    FieldDesc field;
    std::vector<CensusRow> samples;            // ascending bounds
    double s_hat = 0;                          // total / B^2 at the largest bound
    std::optional<double> drift;               // |s_last - s_prev| / s_last
    std::string closest_constant;              // "6/pi^2" or "12/pi^2"
};

// pre: bounds nonempty, strictly increasing, positive.
SchanuelFit schanuel_fit(const FieldDesc& field, const std::vector<Rational>& bounds,
                         unsigned shards = 1);

}  // namespace msect
