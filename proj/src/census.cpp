#include "msect/census.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "msect/errors.hpp"

namespace msect {

namespace {

long floor_to_ll(const Rational& bound, long cap, const char* what) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), bound.num().get_mpz_t(), bound.den().get_mpz_t());
    if (sgn(f) < 0) return -1;
    if (!f.fits_slong_p() || f.get_si() > cap)
        throw std::invalid_argument(std::string(what) + ": bound too large");
    return f.get_si();
}

void check_identity(const CensusRow& row) {
    if ((row.total + 3) % 2 != 0 || row.in_unit != (row.total + 3) / 2)
        throw internal_inconsistency("census: unit-interval pairing identity violated");
}

struct QuadSweepItem {
    QuadElem height;
    QuadElem value;
};

// Properly quadratic elements of K = Q(sqrt d) with height <= B, one shard of
// the leading-coefficient range. Every such element has a unique primitive
// minimal polynomial c2 x^2 + c1 x + c0 with c2 >= 1, and H <= B forces
// c2 <= floor(B), |c0| <= floor(B), |c1| <= 2 floor(B) + 1; the sweep adds a
// margin of one on top of each bound and filters exactly afterwards.
void quad_sweep_shard(const FieldDesc& field, const Rational& bound, long fb,
                      unsigned shard, unsigned shards, std::vector<QuadSweepItem>* out) {
    const long d = field.d;
    const long c2_max = fb + 1, c1_max = 2 * fb + 2, c0_max = fb + 1;
    for (long c2 = 1 + shard; c2 <= c2_max; c2 += shards) {
        for (long c1 = -c1_max; c1 <= c1_max; ++c1) {
            for (long c0 = -c0_max; c0 <= c0_max; ++c0) {
                long disc = c1 * c1 - 4 * c2 * c0;
                if (disc <= 0 || disc % d != 0) continue;
                long w2 = disc / d;
                long w = std::lround(std::sqrt(double(w2)));
                while (w * w > w2) --w;
                while ((w + 1) * (w + 1) <= w2) ++w;
                if (w * w != w2) continue;
                if (std::gcd(std::gcd(c2, std::abs(c1)), std::abs(c0)) != 1) continue;
                Rational u(-c1, 2 * c2);
                Rational v(w, 2 * c2);
                for (int s = 0; s < 2; ++s) {
                    QuadElem x(u, s == 0 ? v : -v, field);
                    HeightValue h = height_k(x);
                    if (cmp_real(h.value, bound) <= 0)
                        out->push_back({h.value, std::move(x)});
                }
            }
        }
    }
}

}  // namespace

std::vector<Rational> enumerate_q(const Rational& bound) {
    long fb = floor_to_ll(bound, 100000, "enumerate_q");
    std::vector<std::pair<BigInt, Rational>> items;
    for (long q = 1; q <= fb; ++q) {
        for (long p = -fb; p <= fb; ++p) {
            if (std::gcd(q, std::abs(p)) != 1) continue;
            items.emplace_back(BigInt(std::max(std::abs(p), q)), Rational(p, q));
        }
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int hc = cmp(a.first, b.first);
        if (hc != 0) return hc < 0;
        return a.second < b.second;
    });
    std::vector<Rational> out;
    out.reserve(items.size());
    for (auto& it : items) out.push_back(std::move(it.second));
    return out;
}

std::vector<QuadElem> enumerate_field(const FieldDesc& field, const Rational& bound,
                                      unsigned shards) {
    if (shards == 0) throw std::invalid_argument("enumerate_field: shards must be positive");
    if (field.degree() == 1) {
        std::vector<QuadElem> out;
        for (const Rational& r : enumerate_q(bound))
            out.push_back(QuadElem::embed(field, r));
        return out;
    }
    long fb = floor_to_ll(bound, 2000, "enumerate_field");
    std::vector<QuadSweepItem> items;

    // Rational elements of K have height H_Q(x)^2.
    BigInt sq = isqrt(BigInt(std::max(fb, 0L)));
    for (const Rational& r : enumerate_q(Rational(sq))) {
        QuadElem x = QuadElem::embed(field, r);
        items.push_back({height_k(x).value, std::move(x)});
    }

    std::vector<std::vector<QuadSweepItem>> parts(shards);
    if (shards == 1) {
        quad_sweep_shard(field, bound, fb, 0, 1, &parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned s = 0; s < shards; ++s)
            pool.emplace_back(quad_sweep_shard, field, bound, fb, s, shards, &parts[s]);
        for (auto& t : pool) t.join();
    }
    for (auto& part : parts)
        for (auto& it : part) items.push_back(std::move(it));

    std::sort(items.begin(), items.end(), [](const QuadSweepItem& a, const QuadSweepItem& b) {
        int hc = cmp_real(a.height, b.height);
        if (hc != 0) return hc < 0;
        return cmp_real(a.value, b.value) < 0;
    });
    for (std::size_t i = 1; i < items.size(); ++i)
        if (items[i - 1].value == items[i].value)
            throw internal_inconsistency("enumerate_field: duplicate element in sweep");
    std::vector<QuadElem> out;
    out.reserve(items.size());
    for (auto& it : items) out.push_back(std::move(it.value));
    return out;
}

CensusRow census(const FieldDesc& field, const Rational& bound, unsigned shards) {
    if (shards == 0) throw std::invalid_argument("census: shards must be positive");
    if (bound < Rational(1)) throw std::invalid_argument("census: bound must be at least 1");
    CensusRow row;
    row.field = field;
    row.bound = bound;
    if (field.degree() == 1) {
        long fb = floor_to_ll(bound, 10000000, "census");
        std::vector<std::uint64_t> totals(shards, 0), units(shards, 0);
        auto work = [&](unsigned shard) {
            std::uint64_t t = 0, u = 0;
            for (long q = 1 + shard; q <= fb; q += shards) {
                for (long p = -fb; p <= fb; ++p) {
                    if (std::gcd(q, std::abs(p)) != 1) continue;
                    ++t;
                    if (std::abs(p) <= q) ++u;
                }
            }
            totals[shard] = t;
            units[shard] = u;
        };
        if (shards == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned s = 0; s < shards; ++s) pool.emplace_back(work, s);
            for (auto& t : pool) t.join();
        }
        for (unsigned s = 0; s < shards; ++s) {
            row.total += totals[s];
            row.in_unit += units[s];
        }
    } else {
        Rational one(1);
        for (const QuadElem& x : enumerate_field(field, bound, shards)) {
            ++row.total;
            if (cmp_real(x, one) <= 0 && cmp_real(x, -one) >= 0) ++row.in_unit;
        }
    }
    check_identity(row);
    return row;
}

SchanuelFit schanuel_fit(const FieldDesc& field, const std::vector<Rational>& bounds,
                         unsigned shards) {
    if (bounds.empty()) throw std::invalid_argument("schanuel_fit: no bounds given");
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (bounds[i] < Rational(1))
            throw std::invalid_argument("schanuel_fit: bounds must be at least 1");
        if (i > 0 && !(bounds[i - 1] < bounds[i]))
            throw std::invalid_argument("schanuel_fit: bounds must be strictly increasing");
    }
    SchanuelFit fit;
    fit.field = field;
    for (const Rational& b : bounds) fit.samples.push_back(census(field, b, shards));
    auto s_of = [](const CensusRow& row) {
        double b = row.bound.to_double();
        return double(row.total) / (b * b);
    };
    fit.s_hat = s_of(fit.samples.back());
    if (fit.samples.size() >= 2) {
        double prev = s_of(fit.samples[fit.samples.size() - 2]);
        fit.drift = std::fabs(fit.s_hat - prev) / fit.s_hat;
    }
    double pi2 = std::numbers::pi * std::numbers::pi;
    fit.closest_constant =
        std::fabs(fit.s_hat - 6.0 / pi2) < std::fabs(fit.s_hat - 12.0 / pi2) ? "6/pi^2"
                                                                             : "12/pi^2";
    return fit;
}

}  // namespace msect
