#include "msect/textio.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <stdexcept>

namespace msect {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') out.push_back(c);
    return out;
}

[[noreturn]] void bad_poly(std::string_view text, const char* why) {
    throw std::invalid_argument("parse_poly: " + std::string(why) + " in '" + std::string(text) +
                                "'");
}

// degree suffix: "", "*x", "*x^e" after a parenthesized coefficient, or the
// same without the leading '*' when the coefficient was elided.
unsigned parse_degree_suffix(std::string_view term, std::string_view tail) {
    if (tail.empty()) return 0;
    if (tail[0] != 'x') bad_poly(term, "expected x");
    tail.remove_prefix(1);
    if (tail.empty()) return 1;
    if (tail[0] != '^') bad_poly(term, "expected ^");
    tail.remove_prefix(1);
    if (tail.empty() || tail.size() > 4) bad_poly(term, "bad exponent");
    unsigned e = 0;
    for (char c : tail) {
        if (c < '0' || c > '9') bad_poly(term, "bad exponent");
        e = e * 10 + unsigned(c - '0');
    }
    if (e == 0) bad_poly(term, "exponent must be positive");
    return e;
}

struct ParsedTerm {
    QuadElem coeff;
    unsigned degree = 0;
};

ParsedTerm parse_term(std::string_view term, const FieldDesc& field, bool negate) {
    if (term.empty()) bad_poly(term, "empty term");
    ParsedTerm out;
    if (term[0] == '(') {
        int depth = 0;
        std::size_t close = std::string_view::npos;
        for (std::size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++depth;
            if (term[i] == ')' && --depth == 0) {
                close = i;
                break;
            }
        }
        if (close == std::string_view::npos) bad_poly(term, "unbalanced parentheses");
        out.coeff = QuadElem::parse(term.substr(1, close - 1), field);
        std::string_view tail = term.substr(close + 1);
        if (!tail.empty()) {
            if (tail[0] != '*') bad_poly(term, "expected * after coefficient");
            out.degree = parse_degree_suffix(term, tail.substr(1));
        }
    } else {
        std::size_t x = term.find('x');
        if (x == std::string_view::npos) {
            out.coeff = QuadElem::embed(field, Rational::parse(term));
        } else if (x == 0) {
            out.coeff = QuadElem::embed(field, Rational(1));
            out.degree = parse_degree_suffix(term, term);
        } else {
            if (term[x - 1] != '*') bad_poly(term, "expected * before x");
            out.coeff = QuadElem::embed(field, Rational::parse(term.substr(0, x - 1)));
            out.degree = parse_degree_suffix(term, term.substr(x));
        }
    }
    if (negate) out.coeff = -out.coeff;
    return out;
}

std::string render_term(const QuadElem& c, std::size_t degree, bool first) {
    std::string sign, body;
    if (c.v().is_zero()) {
        const Rational& r = c.u();
        sign = r.sign() < 0 ? "-" : (first ? "" : "+");
        Rational mag = r.abs();
        if (degree == 0)
            body = mag.str();
        else
            body = (mag == Rational(1) ? "" : mag.str() + "*");
    } else {
        sign = first ? "" : "+";
        body = "(" + c.str() + ")";
        if (degree > 0) body += "*";
    }
    if (degree >= 1) body += "x";
    if (degree >= 2) body += "^" + std::to_string(degree);
    return sign + body;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(std::string_view text, const char* what) {
    std::string s(text);
    char* end = nullptr;
    double x = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty())
        throw std::invalid_argument(std::string(what) + ": bad float '" + s + "'");
    return x;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
    if (text.empty()) throw std::invalid_argument(std::string(what) + ": empty count");
    std::uint64_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string(what) + ": bad count '" + std::string(text) +
                                        "'");
        v = v * 10 + std::uint64_t(c - '0');
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::string render_poly(const KPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const QuadElem& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        out += render_term(c, i, first);
        first = false;
    }
    return out;
}

std::string render_poly(const QPoly& p) {
    return render_poly(to_kpoly(p, FieldDesc::rationals()));
}

KPoly parse_kpoly(std::string_view raw, const FieldDesc& field) {
    std::string text = strip_spaces(raw);
    if (text.empty()) bad_poly(raw, "empty input");
    std::vector<QuadElem> coeffs;
    QuadElem zero = QuadElem::embed(field, Rational(0));
    std::size_t start = 0;
    bool negate = false;
    int depth = 0;
    auto flush = [&](std::size_t end) {
        ParsedTerm t = parse_term(std::string_view(text).substr(start, end - start), field, negate);
        if (t.degree >= coeffs.size()) coeffs.resize(t.degree + 1, zero);
        coeffs[t.degree] = coeffs[t.degree] + t.coeff;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')' && --depth < 0) bad_poly(raw, "unbalanced parentheses");
        if (depth == 0 && (c == '+' || c == '-') && i > start) {
            flush(i);
            start = i + 1;
            negate = c == '-';
        } else if (depth == 0 && c == '-' && i == start) {
            negate = true;
            ++start;
        } else if (depth == 0 && c == '+' && i == start) {
            throw std::invalid_argument("parse_poly: stray '+' in '" + std::string(raw) + "'");
        }
    }
    if (depth != 0) bad_poly(raw, "unbalanced parentheses");
    flush(text.size());
    return KPoly(std::move(coeffs));
}

QPoly parse_qpoly(std::string_view text) {
    KPoly p = parse_kpoly(text, FieldDesc::rationals());
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const QuadElem& e : p.coeffs()) c.push_back(e.u());
    return QPoly(std::move(c));
}

std::vector<Rational> parse_grid(std::string_view text) {
    std::vector<Rational> out;
    if (text.find(':') != std::string_view::npos) {
        auto parts = split(text, ':');
        if (parts.size() != 3 || parts[2].size() < 2 || parts[2][0] != 'x')
            throw std::invalid_argument("parse_grid: expected start:end:xK");
        Rational start = Rational::parse(parts[0]);
        Rational end = Rational::parse(parts[1]);
        Rational k = Rational::parse(parts[2].substr(1));
        if (!k.is_integer() || k < Rational(2))
            throw std::invalid_argument("parse_grid: ramp factor must be an integer >= 2");
        for (Rational b = start; b <= end; b = b * k) out.push_back(b);
    } else {
        for (std::string_view item : split(text, ','))
            out.push_back(Rational::parse(item));
    }
    if (out.empty()) throw std::invalid_argument("parse_grid: empty grid");
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] <= Rational(0))
            throw std::invalid_argument("parse_grid: entries must be positive");
        if (i > 0 && !(out[i - 1] < out[i]))
            throw std::invalid_argument("parse_grid: entries must be strictly increasing");
    }
    return out;
}

std::string census_csv_header() { return "field,B,total,in_unit"; }

std::string to_csv(const CensusRow& row) {
    return row.field.str() + "," + row.bound.str_slash() + "," + std::to_string(row.total) + "," +
           std::to_string(row.in_unit);
}

CensusRow census_from_csv(std::string_view line) {
    auto f = split(line, ',');
    if (f.size() != 4) throw std::invalid_argument("census_from_csv: expected 4 fields");
    CensusRow row;
    row.field = FieldDesc::parse(f[0]);
    row.bound = Rational::parse(f[1]);
    row.total = parse_u64(f[2], "census_from_csv");
    row.in_unit = parse_u64(f[3], "census_from_csv");
    return row;
}

std::string density_csv_header() {
    return "field,m,m_odd,B,numerator,denominator,delta,delta_float";
}

std::string to_csv(const DensityRecord& rec) {
    return rec.field.str() + "," + std::to_string(rec.m) + "," + std::to_string(rec.m_odd) + "," +
           rec.bound.str_slash() + "," + std::to_string(rec.numerator) + "," +
           std::to_string(rec.denominator) + "," + rec.delta.str_slash() + "," +
           format_double(rec.delta_float);
}

DensityRecord density_from_csv(std::string_view line) {
    auto f = split(line, ',');
    if (f.size() != 8) throw std::invalid_argument("density_from_csv: expected 8 fields");
    DensityRecord rec;
    rec.field = FieldDesc::parse(f[0]);
    rec.m = unsigned(parse_u64(f[1], "density_from_csv"));
    rec.m_odd = unsigned(parse_u64(f[2], "density_from_csv"));
    rec.bound = Rational::parse(f[3]);
    rec.numerator = parse_u64(f[4], "density_from_csv");
    rec.denominator = parse_u64(f[5], "density_from_csv");
    rec.delta = Rational::parse(f[6]);
    rec.delta_float = parse_double(f[7], "density_from_csv");
    if (rec.denominator == 0 || rec.delta != Rational(BigInt(rec.numerator), BigInt(rec.denominator)))
        throw std::invalid_argument("density_from_csv: delta does not match the counts");
    return rec;
}

std::vector<DensityRecord> read_density_csv(std::istream& in) {
    std::vector<DensityRecord> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && line == density_csv_header()) {
            first = false;
            continue;
        }
        first = false;
        out.push_back(density_from_csv(line));
    }
    return out;
}

}  // namespace msect
