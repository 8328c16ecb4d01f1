#include "msect/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "msect/errors.hpp"

namespace msect {

namespace {

BigInt radius_from_budget(const Rational& bound, unsigned m_odd, unsigned log2_budget) {
    BigInt n = bound.num() << log2_budget;
    mpz_fdiv_q(n.get_mpz_t(), n.get_mpz_t(), bound.den().get_mpz_t());
    if (sgn(n) <= 0) return BigInt(0);
    return iroot(n, m_odd);
}

long floor_to_ll(const Rational& bound, long cap, const char* what) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), bound.num().get_mpz_t(), bound.den().get_mpz_t());
    if (sgn(f) < 0) return -1;
    if (!f.fits_slong_p() || f.get_si() > cap)
        throw std::invalid_argument(std::string(what) + ": bound too large");
    return f.get_si();
}

template <class Work>
void run_sharded(unsigned shards, Work work) {
    if (shards == 1) {
        work(0);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < shards; ++s) pool.emplace_back(work, s);
    for (auto& t : pool) t.join();
}

std::uint64_t per_element_q(unsigned m, const Rational& bound, const IntPoly& t,
                            unsigned shards) {
    long fb = floor_to_ll(bound, 100000, "msect_count");
    std::vector<std::uint64_t> counts(shards, 0);
    run_sharded(shards, [&](unsigned shard) {
        std::uint64_t c = 0;
        for (long q = 1 + shard; q <= fb; q += shards)
            for (long p = -q; p <= q; ++p) {
                if (std::gcd(q, std::abs(p)) != 1) continue;
                if (decide_sectable(Rational(p, q), m, &t).sectable) ++c;
            }
        counts[shard] = c;
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

std::uint64_t forward_image_q(const Rational& bound, const IntPoly& t, unsigned m_odd,
                              unsigned shards) {
    BigInt radius = preimage_radius_q(bound, m_odd);
    long rb = radius.fits_slong_p() ? radius.get_si() : -1;
    if (rb < 0) throw std::invalid_argument("msect_count: preimage radius too large");
    std::vector<std::vector<Rational>> images(shards);
    run_sharded(shards, [&](unsigned shard) {
        for (long s = 1 + shard; s <= rb; s += shards)
            for (long r = -s; r <= s; ++r) {
                if (std::gcd(s, std::abs(r)) != 1) continue;
                Rational a = t.evaluate(Rational(r, s));
                if (Rational(height_q(a)) <= bound) images[shard].push_back(a);
            }
    });
    std::set<Rational> distinct;
    for (auto& part : images)
        for (auto& a : part) distinct.insert(a);
    return distinct.size();
}

std::uint64_t per_element_quad(const FieldDesc& field, unsigned m, const Rational& bound,
                               const IntPoly& t, unsigned shards) {
    std::vector<QuadElem> elems = enumerate_field(field, bound, shards);
    Rational one(1);
    std::vector<std::uint64_t> counts(shards, 0);
    run_sharded(shards, [&](unsigned shard) {
        std::uint64_t c = 0;
        for (std::size_t i = shard; i < elems.size(); i += shards) {
            const QuadElem& a = elems[i];
            if (cmp_real(a, one) > 0 || cmp_real(a, -one) < 0) continue;
            if (decide_sectable(a, m, &t).sectable) ++c;
        }
        counts[shard] = c;
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

std::uint64_t forward_image_quad(const FieldDesc& field, const Rational& bound,
                                 const IntPoly& t, unsigned m_odd, unsigned shards) {
    BigInt radius = preimage_radius_quad(bound, m_odd);
    std::vector<QuadElem> pre = enumerate_field(field, Rational(radius), shards);
    Rational one(1);
    std::vector<std::vector<QuadElem>> images(shards);
    run_sharded(shards, [&](unsigned shard) {
        for (std::size_t i = shard; i < pre.size(); i += shards) {
            const QuadElem& b = pre[i];
            if (cmp_real(b, one) > 0 || cmp_real(b, -one) < 0) continue;
            QuadElem a = t.evaluate(b);
            if (cmp_real(height_k(a).value, bound) <= 0) images[shard].push_back(a);
        }
    });
    std::set<QuadElem, QuadValueLess> distinct;
    for (auto& part : images)
        for (auto& a : part) distinct.insert(a);
    return distinct.size();
}

}  // namespace

BigInt preimage_radius_q(const Rational& bound, unsigned m_odd) {
    if (m_odd == 0 || m_odd % 2 == 0)
        throw std::invalid_argument("preimage_radius_q: m_odd must be odd and positive");
    return radius_from_budget(bound, m_odd, m_odd);
}

BigInt preimage_radius_quad(const Rational& bound, unsigned m_odd) {
    if (m_odd == 0 || m_odd % 2 == 0)
        throw std::invalid_argument("preimage_radius_quad: m_odd must be odd and positive");
    // quadratic heights are real-valued, so round the certified bound up
    return radius_from_budget(bound, m_odd, 2 * m_odd) + 1;
}

std::uint64_t msect_count(const FieldDesc& field, unsigned m, const Rational& bound,
                          CountMethod method, unsigned shards) {
    if (m == 0) throw std::invalid_argument("msect_count: m must be positive");
    if (shards == 0) throw std::invalid_argument("msect_count: shards must be positive");
    if (bound < Rational(1)) throw std::invalid_argument("msect_count: bound must be at least 1");
    unsigned mo = max_odd_divisor(m);
    if (mo == 1) return census(field, bound, shards).in_unit;
    IntPoly t = chebyshev(mo).T;

    std::uint64_t per = 0, fwd = 0;
    if (field.degree() == 1) {
        if (method != CountMethod::forward_image) per = per_element_q(m, bound, t, shards);
        if (method != CountMethod::per_element) fwd = forward_image_q(bound, t, mo, shards);
    } else {
        if (method != CountMethod::forward_image)
            per = per_element_quad(field, m, bound, t, shards);
        if (method != CountMethod::per_element)
            fwd = forward_image_quad(field, bound, t, mo, shards);
    }
    switch (method) {
        case CountMethod::per_element:
            return per;
        case CountMethod::forward_image:
            return fwd;
        case CountMethod::both:
            if (per != fwd)
                throw internal_inconsistency("msect_count: counting methods disagree");
            return per;
    }
    throw std::invalid_argument("msect_count: unknown method");
}

DensityRecord density(const FieldDesc& field, unsigned m, const Rational& bound,
                      CountMethod method, unsigned shards) {
    CensusRow row = census(field, bound, shards);
    DensityRecord rec;
    rec.field = field;
    rec.m = m;
    rec.m_odd = max_odd_divisor(m);
    rec.bound = bound;
    rec.numerator = msect_count(field, m, bound, method, shards);
    rec.denominator = row.in_unit;
    rec.delta = Rational(BigInt(rec.numerator), BigInt(rec.denominator));
    rec.delta_float = rec.delta.to_double();
    return rec;
}

DecayFit decay_fit(const std::vector<DensityRecord>& records) {
    if (records.empty()) throw std::invalid_argument("decay_fit: no records");
    for (const DensityRecord& r : records)
        if (!(r.field == records.front().field) || r.m != records.front().m)
            throw std::invalid_argument("decay_fit: records must share one field and one m");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    unsigned n = 0;
    for (const DensityRecord& r : records) {
        if (r.numerator == 0) continue;
        double x = std::log(r.bound.to_double());
        double y = std::log(r.delta_float);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw std::invalid_argument("decay_fit: need at least two nonzero densities");
    DecayFit fit;
    fit.points_used = n;
    double denom = n * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("decay_fit: degenerate abscissae");
    fit.fitted_slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.fitted_slope * sx) / n;
    fit.theoretical_slope = 2.0 / records.front().m_odd - 2.0;
    return fit;
}

}  // namespace msect
