#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "msect/census.hpp"
#include "msect/density.hpp"

namespace msect {

// Canonical polynomial text, ascending powers: "-1-6*x+8*x^3". Coefficients
// with an irrational part are parenthesized: "(1+1*sqrt(2))*x^2". parse
// accepts the rendered form plus optional spaces; render(parse(s)) is a fixed
// point on canonical text.
std::string render_poly(const QPoly& p);
std::string render_poly(const KPoly& p);
QPoly parse_qpoly(std::string_view text);
KPoly parse_kpoly(std::string_view text, const FieldDesc& field);

// Bound grids: either a comma list "4,8,12" or a geometric ramp
// "start:end:xK" (multiply by integer K >= 2 while <= end). Entries must be
// positive and strictly increasing.
std::vector<Rational> parse_grid(std::string_view text);

// CSV, schema version 1. Rationals are rendered "p/q" (denominator kept even
// when 1), floats with enough digits to round-trip.
std::string census_csv_header();
std::string to_csv(const CensusRow& row);
CensusRow census_from_csv(std::string_view line);

std::string density_csv_header();
std::string to_csv(const DensityRecord& rec);
DensityRecord density_from_csv(std::string_view line);
std::vector<DensityRecord> read_density_csv(std::istream& in);

}  // namespace msect
