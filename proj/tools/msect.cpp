#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "msect/census.hpp"
#include "msect/density.hpp"
#include "msect/errors.hpp"
#include "msect/sectability.hpp"
#include "msect/textio.hpp"

namespace {

using nlohmann::json;
using namespace msect;

unsigned default_shards() {
    const char* env = std::getenv("MSECT_SHARDS");
    if (env == nullptr) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 64)
        throw std::invalid_argument("MSECT_SHARDS must be an integer in [1, 64]");
    return unsigned(v);
}

json to_json(const SectVerdict& v) {
    json out{{"field", v.a.field().str()},
             {"a", v.a.str()},
             {"m", v.m},
             {"m_odd", v.m_odd},
             {"sectable", v.sectable}};
    out["witness"] = v.witness ? json(v.witness->str()) : json(nullptr);
    if (v.certificate)
        out["certificate"] = {{"candidates", v.certificate->candidates},
                              {"filtered", v.certificate->filtered},
                              {"evaluated", v.certificate->evaluated}};
    else
        out["certificate"] = nullptr;
    return out;
}

CountMethod parse_method(const std::string& name) {
    if (name == "per-element") return CountMethod::per_element;
    if (name == "forward-image") return CountMethod::forward_image;
    if (name == "both") return CountMethod::both;
    throw std::invalid_argument("unknown method '" + name + "'");
}

std::string svg_plot(const std::vector<DensityRecord>& records, const DecayFit& fit) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records)
        if (r.numerator > 0)
            pts.push_back({std::log(r.bound.to_double()), std::log(r.delta_float)});
    double x0 = pts.front().first, x1 = pts.back().first;
    double y0 = pts.front().second, y1 = y0;
    for (auto& p : pts) {
        y0 = std::min(y0, p.second);
        y1 = std::max(y1, p.second);
    }
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) y1 = y0 + 1;
    const double w = 640, h = 480, ml = 60, mr = 20, mt = 20, mb = 40;
    auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - y0) / (y1 - y0) * (h - mt - mb); };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    s << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
      << h - mb << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
      << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 10
      << "\" text-anchor=\"middle\" font-size=\"13\">log B</text>\n";
    s << "<text x=\"14\" y=\"" << (mt + h - mb) / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 14 "
      << (mt + h - mb) / 2 << ")\">log delta</text>\n";
    auto line_for = [&](double slope, double intercept, const char* dash, const char* color) {
        std::ostringstream t;
        t << "<line x1=\"" << px(x0) << "\" y1=\"" << py(slope * x0 + intercept) << "\" x2=\""
          << px(x1) << "\" y2=\"" << py(slope * x1 + intercept) << "\" stroke=\"" << color
          << "\" stroke-dasharray=\"" << dash << "\"/>\n";
        return t.str();
    };
    s << line_for(fit.fitted_slope, fit.intercept, "none", "#1f77b4");
    double ti = pts.front().second - fit.theoretical_slope * pts.front().first;
    s << line_for(fit.theoretical_slope, ti, "6,4", "#888888");
    for (auto& p : pts)
        s << "<circle cx=\"" << px(p.first) << "\" cy=\"" << py(p.second)
          << "\" r=\"3.5\" fill=\"#d62728\"/>\n";
    s << "</svg>\n";
    return s.str();
}

// Randomized cross-checks of the exact kernels against independent
// recomputations. Any violation raises internal_inconsistency.
unsigned run_verify(std::uint64_t seed, unsigned shards, std::ostream& out) {
    std::mt19937_64 rng(seed);
    unsigned checks = 0;
    auto expect = [&](bool ok, const char* what) {
        if (!ok) throw internal_inconsistency(std::string("verify: ") + what);
        ++checks;
    };

    for (unsigned m = 0; m <= 24; ++m) {
        auto a = chebyshev(m), b = chebyshev_explicit(m);
        expect(a.T == b.T && a.U == b.U, "recurrence vs explicit coefficients");
    }

    QPoly x2m1 = QPoly(std::vector<Rational>{-1, 0, 1});
    for (unsigned m = 1; m <= 12; ++m) {
        auto p = chebyshev(m);
        QPoly t = to_qpoly(p.T), u = to_qpoly(p.U);
        expect(t * t - x2m1 * u * u == QPoly(std::vector<Rational>{1}),
               "Pell identity T^2 - (x^2-1) U^2 = 1");
    }

    for (int i = 0; i < 40; ++i) {
        unsigned r = 1 + unsigned(rng() % 5), s = 1 + unsigned(rng() % 5);
        expect(to_qpoly(chebyshev(r * s).T) == to_qpoly(chebyshev(r).T).compose(to_qpoly(chebyshev(s).T)),
               "composition T_rs = T_r(T_s)");
    }

    for (int i = 0; i < 300; ++i) {
        long q = 1 + long(rng() % 40);
        long p = long(rng() % (2 * q + 1)) - q;
        Rational b(p, q);
        unsigned m = 1 + unsigned(rng() % 9);
        auto chk = interval_check(b, m);
        expect(chk.x_in_unit && chk.image_in_unit, "T_m maps [-1,1] into [-1,1]");
        expect(angle_residual(b, m) < 1e-9, "angle doubling residual");
    }

    for (int i = 0; i < 200; ++i) {
        long q = 1 + long(rng() % 30);
        long p = long(rng() % (2 * q + 1)) - q;
        unsigned m = 1 + unsigned(rng() % 9);
        SectVerdict v = decide_sectable(Rational(p, q), m);
        if (v.sectable) {
            QPoly t = to_qpoly(chebyshev(v.m_odd).T);
            expect(t.evaluate(v.witness->u()) == Rational(p, q), "witness satisfies T(b) = a");
        }
        SectVerdict vo = decide_sectable(Rational(p, q), v.m_odd);
        expect(v.sectable == vo.sectable, "m-sectability matches m_odd-sectability");
    }

    for (long d : {2L, 3L, 5L, 7L, 13L}) {
        FieldDesc f = FieldDesc::quadratic(d);
        for (int i = 0; i < 60; ++i) {
            Rational u(long(rng() % 41) - 20, 1 + long(rng() % 12));
            Rational v(long(rng() % 41) - 20, 1 + long(rng() % 12));
            QuadElem x(u, v, f);
            if (x.is_zero()) continue;
            expect(height_k(x).value == places_oracle(x).value,
                   "height agrees with the product over places");
        }
    }

    for (int i = 0; i < 8; ++i) {
        Rational bound(2 + long(rng() % 60));
        census(FieldDesc::rationals(), bound, shards);
        ++checks;  // identity asserted inside
    }
    for (long d : {2L, 5L}) {
        Rational bound(2 + long(rng() % 7));
        census(FieldDesc::quadratic(d), bound, shards);
        ++checks;
    }

    for (unsigned m : {3u, 5u, 6u}) {
        Rational bound(4 + long(rng() % 24));
        msect_count(FieldDesc::rationals(), m, bound, CountMethod::both, shards);
        ++checks;  // method agreement asserted inside
    }
    msect_count(FieldDesc::quadratic(2), 3, Rational(4 + long(rng() % 3)), CountMethod::both,
                shards);
    ++checks;

    out << "verify: " << checks << " checks passed (seed " << seed << ")\n";
    return checks;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Exact m-sectability of angles over Q and real quadratic fields"};
    app.require_subcommand(1);
    unsigned shards = default_shards();
    app.add_option("--shards", shards, "worker count (results are shard-invariant)")
        ->check(CLI::Range(1u, 64u));

    std::string field_s = "Q", a_s, poly_s, grid_s, method_s = "both", in_s, out_s, plot_s,
                kind_s = "t";
    unsigned m = 0;
    std::uint64_t seed = 20260822;
    Rational bound;

    auto* decide = app.add_subcommand("decide", "decide m-sectability of an angle");
    decide->add_option("--a", a_s, "cosine of the angle")->required();
    decide->add_option("--m", m, "section count")->required();
    decide->add_option("--field", field_s, "Q or Q(sqrt d)");

    auto* cheb = app.add_subcommand("chebyshev", "print a Chebyshev polynomial");
    cheb->add_option("--m", m, "index")->required();
    cheb->add_option("--kind", kind_s, "t or u")->check(CLI::IsMember({"t", "u"}));

    auto* roots = app.add_subcommand("roots", "roots of a polynomial in the field");
    roots->add_option("--poly", poly_s, "polynomial, ascending powers")->required();
    roots->add_option("--field", field_s, "Q or Q(sqrt d)");

    auto* cens = app.add_subcommand("census", "count elements by height");
    cens->add_option("--field", field_s, "Q or Q(sqrt d)");
    cens->add_option("--B", grid_s, "bound grid")->required();

    auto* enum_ = app.add_subcommand("enumerate", "list elements of height <= B");
    enum_->add_option("--field", field_s, "Q or Q(sqrt d)");
    enum_->add_option("--B", grid_s, "height bound")->required();

    auto* dens = app.add_subcommand("density", "m-sectable density per height bound");
    dens->add_option("--field", field_s, "Q or Q(sqrt d)");
    dens->add_option("--m", m, "section count")->required();
    dens->add_option("--grid", grid_s, "bound grid")->required();
    dens->add_option("--method", method_s, "per-element, forward-image, or both");
    dens->add_option("--out", out_s, "output CSV path (default stdout)");

    auto* fit = app.add_subcommand("fit", "fit the density decay exponent");
    fit->add_option("--in", in_s, "density CSV path")->required();
    fit->add_option("--plot", plot_s, "write a log-log SVG plot");

    auto* schan = app.add_subcommand("schanuel", "census growth against B^2");
    schan->add_option("--field", field_s, "Q or Q(sqrt d)");
    schan->add_option("--grid", grid_s, "bound grid")->required();

    auto* wit = app.add_subcommand("witness", "bisection-refinement witness family");
    wit->add_option("--m", m, "section count, even and not a power of two")->required();

    auto* verify = app.add_subcommand("verify", "randomized self-checks");
    verify->add_option("--seed", seed, "RNG seed");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (decide->parsed()) {
        FieldDesc field = FieldDesc::parse(field_s);
        SectVerdict v = decide_sectable(QuadElem::parse(a_s, field), m);
        std::cout << to_json(v).dump(2) << "\n";
    } else if (cheb->parsed()) {
        ChebyshevPair p = chebyshev(m);
        std::cout << chebyshev_display(kind_s == "t" ? p.T : p.U) << "\n";
    } else if (roots->parsed()) {
        FieldDesc field = FieldDesc::parse(field_s);
        if (field.degree() == 1) {
            for (const Rational& r : rational_roots(parse_qpoly(poly_s)))
                std::cout << r.str() << "\n";
        } else {
            for (const QuadElem& r : quad_roots(parse_kpoly(poly_s, field)))
                std::cout << r.str() << "\n";
        }
    } else if (cens->parsed()) {
        FieldDesc field = FieldDesc::parse(field_s);
        std::cout << census_csv_header() << "\n";
        for (const Rational& b : parse_grid(grid_s))
            std::cout << to_csv(census(field, b, shards)) << "\n";
    } else if (enum_->parsed()) {
        FieldDesc field = FieldDesc::parse(field_s);
        for (const QuadElem& x : enumerate_field(field, Rational::parse(grid_s), shards))
            std::cout << x.str() << "\n";
    } else if (dens->parsed()) {
        FieldDesc field = FieldDesc::parse(field_s);
        CountMethod method = parse_method(method_s);
        std::ostringstream buf;
        buf << density_csv_header() << "\n";
        for (const Rational& b : parse_grid(grid_s))
            buf << to_csv(density(field, m, b, method, shards)) << "\n";
        if (out_s.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(out_s);
            if (!f) throw std::invalid_argument("cannot open '" + out_s + "'");
            f << buf.str();
        }
    } else if (fit->parsed()) {
        std::ifstream f(in_s);
        if (!f) throw std::invalid_argument("cannot open '" + in_s + "'");
        std::vector<DensityRecord> records = read_density_csv(f);
        DecayFit df = decay_fit(records);
        json out{{"field", records.front().field.str()},
                 {"m", records.front().m},
                 {"m_odd", records.front().m_odd},
                 {"fitted_slope", df.fitted_slope},
                 {"theoretical_slope", df.theoretical_slope},
                 {"intercept", df.intercept},
                 {"points_used", df.points_used}};
        std::cout << out.dump(2) << "\n";
        if (!plot_s.empty()) {
            std::ofstream p(plot_s);
            if (!p) throw std::invalid_argument("cannot open '" + plot_s + "'");
            p << svg_plot(records, df);
        }
    } else if (schan->parsed()) {
        FieldDesc field = FieldDesc::parse(field_s);
        SchanuelFit sf = schanuel_fit(field, parse_grid(grid_s), shards);
        json samples = json::array();
        for (const CensusRow& row : sf.samples)
            samples.push_back({{"B", row.bound.str()},
                               {"total", row.total},
                               {"in_unit", row.in_unit}});
        json out{{"field", field.str()},
                 {"samples", samples},
                 {"s_hat", sf.s_hat},
                 {"closest_constant", sf.closest_constant}};
        out["drift"] = sf.drift ? json(*sf.drift) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else if (wit->parsed()) {
        WitnessFamily w = witness_family(m);
        SectVerdict v = decide_sectable(w.a, w.m);
        QPoly naive = to_qpoly(chebyshev(w.m).T) - QPoly(std::vector<Rational>{w.a});
        bool naive_root = !rational_roots(naive).empty();
        json out{{"m", w.m},
                 {"k", w.k},
                 {"n", w.n},
                 {"a", w.a.str()},
                 {"nu3_exponent", w.nu3.exponent},
                 {"sectable", v.sectable},
                 {"naive_full_degree_root", naive_root}};
        out["witness"] = v.witness ? json(v.witness->str()) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else if (verify->parsed()) {
        run_verify(seed, shards, std::cout);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
