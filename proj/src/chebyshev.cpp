#include "msect/chebyshev.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "msect/factor.hpp"

namespace msect {

namespace {

BigInt binom(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

ChebyshevPair chebyshev(unsigned m) {
    IntPoly t_prev(std::vector<BigInt>{1}), t_cur(std::vector<BigInt>{0, 1});
    IntPoly u_prev, u_cur(std::vector<BigInt>{1});
    if (m == 0) return {0, t_prev, u_prev};
    const IntPoly two_x(std::vector<BigInt>{0, 2});
    for (unsigned i = 2; i <= m; ++i) {
        IntPoly t_next = two_x * t_cur - t_prev;
        IntPoly u_next = two_x * u_cur - u_prev;
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
        u_prev = std::move(u_cur);
        u_cur = std::move(u_next);
    }
    return {m, t_cur, u_cur};
}

ChebyshevPair chebyshev_explicit(unsigned m) {
    if (m == 0) return {0, IntPoly(std::vector<BigInt>{1}), IntPoly()};
    std::vector<BigInt> t(m + 1, BigInt(0));
    for (unsigned k = 0; 2 * k <= m; ++k) {
        for (unsigned l = 0; l <= k; ++l) {
            BigInt term = binom(m, 2 * k) * binom(k, l);
            if ((k + l) % 2) term = -term;
            t[m - 2 * k + 2 * l] += term;
        }
    }
    IntPoly u;
    const IntPoly x2m1(std::vector<BigInt>{-1, 0, 1});
    IntPoly x2m1_pow(std::vector<BigInt>{1});
    for (unsigned k = 0; 2 * k + 1 <= m; ++k) {
        if (k > 0) x2m1_pow = x2m1_pow * x2m1;
        u = u + x2m1_pow.scaled(binom(m, 2 * k + 1)).shifted(m - 2 * k - 1);
    }
    return {m, IntPoly(std::move(t)), u};
}

ChebyshevTable::ChebyshevTable(unsigned max_m) {
    pairs_.reserve(max_m + 1);
    pairs_.push_back({0, IntPoly(std::vector<BigInt>{1}), IntPoly()});
    if (max_m == 0) return;
    pairs_.push_back({1, IntPoly(std::vector<BigInt>{0, 1}), IntPoly(std::vector<BigInt>{1})});
    const IntPoly two_x(std::vector<BigInt>{0, 2});
    for (unsigned m = 2; m <= max_m; ++m) {
        pairs_.push_back({m, two_x * pairs_[m - 1].T - pairs_[m - 2].T,
                          two_x * pairs_[m - 1].U - pairs_[m - 2].U});
    }
}

const ChebyshevPair& ChebyshevTable::at(unsigned m) const {
    if (m >= pairs_.size()) throw std::invalid_argument("ChebyshevTable: m beyond table");
    return pairs_[m];
}

IntervalCheck interval_check(const Rational& x, unsigned m) {
    const Rational one(1);
    Rational tx = chebyshev(m).T.evaluate(x);
    return {x.abs() <= one, tx.abs() <= one};
}

double angle_residual(const Rational& b, unsigned m) {
    if (b.abs() > Rational(1)) throw std::invalid_argument("angle_residual: |b| > 1");
    double bd = b.to_double();
    std::complex<double> beta(bd, std::sqrt(std::max(0.0, 1.0 - bd * bd)));
    std::complex<double> pw(1.0, 0.0);
    for (unsigned i = 0; i < m; ++i) pw *= beta;
    double exact = chebyshev(m).T.evaluate(b).to_double();
    return std::fabs(pw.real() - exact);
}

bool eisenstein_irreducible(unsigned m, const Rational& a) {
    if (m < 3 || m % 2 == 0 || !is_prime(BigInt((unsigned long)m)))
        throw std::invalid_argument("eisenstein_irreducible: m must be an odd prime");
    BigInt r = a.num(), s = a.den(), p((unsigned long)m);
    if (!mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) return false;
    if (mpz_divisible_p(r.get_mpz_t(), BigInt(p * p).get_mpz_t())) return false;
    return gcd(s, p) == 1;
}

bool coeff_divisibility(unsigned m) {
    if (m == 0) throw std::invalid_argument("coeff_divisibility: m must be positive");
    IntPoly t = chebyshev(m).T;
    BigInt mm((unsigned long)m);
    for (int i = 0; i < t.degree(); ++i)
        if (!mpz_divisible_p(t[i].get_mpz_t(), mm.get_mpz_t())) return false;
    return true;
}

std::string chebyshev_display(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const BigInt& c = p[std::size_t(i)];
        if (sgn(c) == 0) continue;
        if (!out.empty()) out += sgn(c) > 0 ? "+" : "-";
        else if (sgn(c) < 0) out += "-";
        BigInt a = abs(c);
        bool show_coeff = (a != 1) || i == 0;
        if (show_coeff) out += a.get_str();
        if (i > 0) {
            if (show_coeff) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace msect
