#include <algorithm>
#include <cmath>
#include <cstdint>

#include "msect/factor.hpp"
#include "msect/poly.hpp"

namespace msect {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

// sum of c[i] * r^i * s^(n-i); caller has proven no overflow
bool eval_zero_i128(const std::vector<i64>& c, i64 r, i64 s) {
    i128 acc = c.back();
    i128 spow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        spow *= s;
        acc = acc * r + i128(c[i]) * spow;
    }
    return acc == 0;
}

bool eval_zero_mpz(const std::vector<BigInt>& c, const BigInt& r, const BigInt& s) {
    BigInt acc = c.back(), spow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        spow *= s;
        acc = acc * r + c[i] * spow;
    }
    return sgn(acc) == 0;
}

struct CandidateScan {
    // q: the x^k-stripped polynomial, q[0] != 0, deg >= 1
    explicit CandidateScan(const IntPoly& q) : big(q.coeffs()) {
        n = big.size() - 1;
        p1 = 0;
        pm1 = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            p1 += big[i];
            if (i % 2) pm1 -= big[i];
            else pm1 += big[i];
        }
        // Cauchy bound 1 + max|c_i|/|c_lead| over i < n, as num/den
        BigInt maxc = 0;
        for (std::size_t i = 0; i < n; ++i) maxc = std::max(maxc, BigInt(abs(big[i])));
        bound_num = abs(big[n]) + maxc;
        bound_den = abs(big[n]);
        small_ok = true;
        double lg_maxc = 0;
        for (const BigInt& v : big) {
            if (!fits_i64(v)) { small_ok = false; break; }
            lg_maxc = std::max(lg_maxc, std::log2(std::fabs(v.get_d()) + 1.0));
        }
        if (small_ok) {
            for (const BigInt& v : big) small.push_back(to_i64(v));
            // max(|r|, s) <= m_cap keeps the i128 Horner below 2^120
            double budget = (120.0 - lg_maxc - std::log2(double(n + 1))) / double(n);
            m_cap = budget >= 62 ? i64(1) << 62 : i64(std::exp2(std::max(budget, 0.0)));
        }
    }

    bool root_at(const BigInt& num, const BigInt& den) const {
        if (small_ok && fits_i64(num) && fits_i64(den)) {
            i64 r = to_i64(num), s = to_i64(den);
            if (std::max(r < 0 ? -r : r, s) <= m_cap) return eval_zero_i128(small, r, s);
        }
        return eval_zero_mpz(big, num, den);
    }

    std::vector<BigInt> big;
    std::vector<i64> small;
    std::size_t n = 0;
    BigInt p1, pm1, bound_num, bound_den;
    bool small_ok = false;
    i64 m_cap = 0;
};

void scan_candidates(const IntPoly& q, std::set<Rational>& roots, RootSearchStats& st) {
    CandidateScan scan(q);
    const std::vector<BigInt> rs = divisors(q.coeffs().front());
    const std::vector<BigInt> ss = divisors(q.leading());
    for (std::size_t si = 0; si < ss.size(); ++si) {
        const BigInt& s = ss[si];
        for (std::size_t ri = 0; ri < rs.size(); ++ri) {
            const BigInt& r = rs[ri];
            if (gcd(r, s) != 1) continue;
            if (r * scan.bound_den > s * scan.bound_num) {
                // divisors ascend, so every later r fails the root bound too
                for (std::size_t rj = ri; rj < rs.size(); ++rj) {
                    if (gcd(rs[rj], s) == 1) { st.candidates += 2; st.filtered += 2; }
                }
                break;
            }
            for (int sign = 0; sign < 2; ++sign) {
                BigInt num = sign ? BigInt(-r) : r;
                ++st.candidates;
                if (num == s) {  // candidate 1
                    ++st.evaluated;
                    if (sgn(scan.p1) == 0) roots.insert(Rational(1));
                    continue;
                }
                if (num == -s) {  // candidate -1
                    ++st.evaluated;
                    if (sgn(scan.pm1) == 0) roots.insert(Rational(-1));
                    continue;
                }
                BigInt d1 = num - s;
                if (sgn(scan.p1) != 0 && !mpz_divisible_p(scan.p1.get_mpz_t(), d1.get_mpz_t())) {
                    ++st.filtered;
                    continue;
                }
                BigInt d2 = num + s;
                if (sgn(scan.pm1) != 0 && !mpz_divisible_p(scan.pm1.get_mpz_t(), d2.get_mpz_t())) {
                    ++st.filtered;
                    continue;
                }
                ++st.evaluated;
                if (scan.root_at(num, s)) roots.insert(Rational(num, s));
            }
        }
    }
}

}  // namespace

std::set<Rational> rational_roots(const IntPoly& p, RootSearchStats* stats) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    RootSearchStats local;
    RootSearchStats& st = stats ? *stats : local;
    std::set<Rational> roots;
    std::size_t k = 0;
    while (coeff_is_zero(p[k])) ++k;
    if (k > 0) roots.insert(Rational(0));
    if (p.coeffs().size() - k == 1) return roots;  // c * x^k
    std::vector<BigInt> rest(p.coeffs().begin() + k, p.coeffs().end());
    scan_candidates(IntPoly(std::move(rest)), roots, st);
    return roots;
}

std::set<Rational> rational_roots(const QPoly& p, RootSearchStats* stats) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    return rational_roots(clear_denominators(p).poly, stats);
}

}  // namespace msect
