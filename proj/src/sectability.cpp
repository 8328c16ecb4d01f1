#include "msect/sectability.hpp"

#include <cmath>
#include <stdexcept>

#include "msect/errors.hpp"

namespace msect {

unsigned max_odd_divisor(unsigned m) {
    if (m == 0) throw std::invalid_argument("max_odd_divisor: m must be positive");
    while (m % 2 == 0) m /= 2;
    return m;
}

namespace {

// q * (T_m(x) - p/q) with integer coefficients; primitive since gcd(p, q) = 1
// and the leading coefficient 2^{m-1} q shares no odd prime with q beyond
// those cancelled by gcd(p, q) = 1 together with content(T_m) = 1.
IntPoly cleared_shifted_chebyshev(const IntPoly& t, const Rational& a) {
    std::vector<BigInt> c = t.coeffs();
    const BigInt& q = a.den();
    for (auto& ci : c) ci *= q;
    if (c.empty()) c.push_back(0);
    c[0] -= a.num();
    return IntPoly(std::move(c));
}

void check_unit_interval(bool inside) {
    if (!inside) throw std::invalid_argument("decide_sectable: |a| must be at most 1");
}

}  // namespace

SectVerdict decide_sectable(const Rational& a, unsigned m, const IntPoly* t_modd) {
    check_unit_interval(a.abs() <= Rational(1));
    SectVerdict v;
    v.a = QuadElem::embed(FieldDesc::rationals(), a);
    v.m = m;
    v.m_odd = max_odd_divisor(m);
    if (v.m_odd == 1) {
        v.sectable = true;
        v.witness = v.a;
        return v;
    }
    IntPoly local;
    if (t_modd == nullptr) {
        local = chebyshev(v.m_odd).T;
        t_modd = &local;
    }
    RootSearchStats stats;
    auto roots = rational_roots(cleared_shifted_chebyshev(*t_modd, a), &stats);
    if (roots.empty()) {
        v.sectable = false;
        v.certificate = stats;
    } else {
        v.sectable = true;
        v.witness = QuadElem::embed(FieldDesc::rationals(), *roots.begin());
    }
    return v;
}

SectVerdict decide_sectable(const QuadElem& a, unsigned m, const IntPoly* t_modd) {
    if (a.field().degree() == 1) return decide_sectable(a.u(), m, t_modd);
    check_unit_interval(cmp_real(a, Rational(-1)) >= 0 && cmp_real(a, Rational(1)) <= 0);
    SectVerdict v;
    v.a = a;
    v.m = m;
    v.m_odd = max_odd_divisor(m);
    if (v.m_odd == 1) {
        v.sectable = true;
        v.witness = a;
        return v;
    }
    IntPoly local;
    if (t_modd == nullptr) {
        local = chebyshev(v.m_odd).T;
        t_modd = &local;
    }
    KPoly p = to_kpoly(to_qpoly(*t_modd), a.field());
    p = p - KPoly(std::vector<QuadElem>{a});
    RootSearchStats stats;
    auto roots = quad_roots(p, &stats);
    if (roots.empty()) {
        v.sectable = false;
        v.certificate = stats;
    } else {
        v.sectable = true;
        v.witness = roots.front();
    }
    return v;
}

WitnessFamily witness_family(unsigned m) {
    if (m % 2 != 0 || max_odd_divisor(m) == 1)
        throw std::invalid_argument("witness_family: m must be even and not a power of two");
    WitnessFamily w;
    w.m = m;
    w.n = max_odd_divisor(m);
    unsigned half = m / 2;
    for (unsigned t = m; t % 2 == 0; t /= 2) ++w.k;
    const IntPoly& th = chebyshev(half).T;
    w.a = th.evaluate(Rational(1, 3));
    w.nu3 = valuation(w.a, BigInt(3));
    if (w.nu3.exponent != -static_cast<long>(half))
        throw internal_inconsistency("witness_family: unexpected 3-adic valuation");
    return w;
}

PowerOfTwoWitness power_of_two_witness(unsigned k, const Rational& a) {
    check_unit_interval(a.abs() <= Rational(1));
    PowerOfTwoWitness w;
    w.chain.reserve(k + 1);
    double c = a.to_double();
    w.chain.push_back(c);
    for (unsigned i = 0; i < k; ++i) {
        double next = std::sqrt((1.0 + c) / 2.0);
        w.chain.push_back(next);
        w.residual = std::max(w.residual, std::fabs(2.0 * next * next - 1.0 - c));
        c = next;
    }
    return w;
}

}  // namespace msect
