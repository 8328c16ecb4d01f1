#include "msect/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "msect/errors.hpp"
#include "msect/factor.hpp"

namespace msect {

FieldDesc FieldDesc::quadratic(long d) {
    if (d < 2 || !is_squarefree(d)) throw std::invalid_argument("FieldDesc: d must be squarefree and >= 2");
    return FieldDesc{Kind::quadratic, d};
}

FieldDesc FieldDesc::parse(std::string_view text) {
    if (text == "Q") return rationals();
    const std::string_view pre = "Q(sqrt ";
    if (text.size() > pre.size() + 1 && text.substr(0, pre.size()) == pre && text.back() == ')') {
        std::string digits(text.substr(pre.size(), text.size() - pre.size() - 1));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return quadratic(std::stol(digits));
    }
    throw std::invalid_argument("FieldDesc::parse: expected \"Q\" or \"Q(sqrt d)\", got '" + std::string(text) + "'");
}

std::string FieldDesc::str() const {
    return is_rationals() ? "Q" : "Q(sqrt " + std::to_string(d) + ")";
}

QuadElem::QuadElem(Rational u, Rational v, FieldDesc field)
    : u_(std::move(u)), v_(std::move(v)), field_(field) {
    if (field_.is_rationals() && !v_.is_zero())
        throw std::invalid_argument("QuadElem: nonzero sqrt part over Q");
}

namespace {

void require_same_field(const QuadElem& a, const QuadElem& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("QuadElem: field mismatch");
}

// sign of u + v sqrt(d), exact
int sign_uv(const Rational& u, const Rational& v, long d) {
    if (v.is_zero()) return u.sign();
    if (u.is_zero()) return v.sign();
    if (u.sign() == v.sign()) return u.sign();
    Rational uu = u * u, vvd = v * v * Rational(d);
    if (uu == vvd) throw internal_inconsistency("QuadElem: sqrt(d) compared rational");
    return uu > vvd ? u.sign() : v.sign();
}

}  // namespace

int QuadElem::sign() const { return sign_uv(u_, v_, field_.d); }

Rational QuadElem::norm() const { return u_ * u_ - v_ * v_ * Rational(field_.d); }

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw std::invalid_argument("QuadElem: division by zero");
    Rational n = norm();
    return {u_ / n, -v_ / n, field_};
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    return {a.u_ + b.u_, a.v_ + b.v_, a.field_};
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    return {a.u_ - b.u_, a.v_ - b.v_, a.field_};
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    Rational d(a.field_.d);
    return {a.u_ * b.u_ + a.v_ * b.v_ * d, a.u_ * b.v_ + a.v_ * b.u_, a.field_};
}

QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * b.inverse(); }

double QuadElem::to_double() const {
    return u_.to_double() + v_.to_double() * std::sqrt(double(field_.d));
}

std::string QuadElem::str() const {
    if (v_.is_zero()) return u_.str();
    std::string root = v_.abs().str() + "*sqrt(" + std::to_string(field_.d) + ")";
    if (u_.is_zero()) return (v_.sign() < 0 ? "-" : "") + root;
    return u_.str() + (v_.sign() < 0 ? "-" : "+") + root;
}

QuadElem QuadElem::parse(std::string_view text, const FieldDesc& field) {
    std::size_t mark = text.find("*sqrt(");
    if (mark == std::string_view::npos) {
        return embed(field, Rational::parse(text));
    }
    if (field.is_rationals()) throw std::invalid_argument("QuadElem::parse: sqrt term over Q");
    if (text.back() != ')') throw std::invalid_argument("QuadElem::parse: bad element '" + std::string(text) + "'");
    std::string ds(text.substr(mark + 6, text.size() - mark - 7));
    if (ds.empty() || ds.find_first_not_of("0123456789") != std::string::npos || std::stol(ds) != field.d)
        throw std::invalid_argument("QuadElem::parse: sqrt argument does not match field");
    // scan back across the v literal to the sign splitting u from v
    std::size_t start = mark;
    while (start > 0) {
        char c = text[start - 1];
        if ((c >= '0' && c <= '9') || c == '/') --start;
        else break;
    }
    if (start == mark) throw std::invalid_argument("QuadElem::parse: missing sqrt coefficient");
    Rational v = Rational::parse(text.substr(start, mark - start));
    Rational u(0);
    if (start > 0) {
        char sign = text[start - 1];
        if (sign != '+' && sign != '-') throw std::invalid_argument("QuadElem::parse: bad element '" + std::string(text) + "'");
        if (sign == '-') v = -v;
        if (start > 1) u = Rational::parse(text.substr(0, start - 1));
        else if (sign == '+')  // canonical form never opens with '+'
            throw std::invalid_argument("QuadElem::parse: bad element '" + std::string(text) + "'");
    }
    return {u, v, field};
}

int cmp_real(const QuadElem& a, const QuadElem& b) {
    require_same_field(a, b);
    return sign_uv(a.u() - b.u(), a.v() - b.v(), a.field().d);
}

int cmp_real(const QuadElem& a, const Rational& r) {
    return sign_uv(a.u() - r, a.v(), a.field().d);
}

std::array<BigInt, 3> quad_min_poly(const QuadElem& x) {
    if (x.is_rational()) throw std::invalid_argument("quad_min_poly: element is rational");
    Rational s = x.trace(), t = x.norm();  // x^2 - s x + t
    BigInt l = lcm(s.den(), t.den());
    BigInt a2 = l, a1 = -s.num() * (l / s.den()), a0 = t.num() * (l / t.den());
    BigInt g = gcd(gcd(a2, a1), a0);
    return {a2 / g, a1 / g, a0 / g};
}

std::vector<Place> archimedean_places(const FieldDesc& field) {
    if (field.is_rationals())
        return {Place{Place::Kind::real_embedding, Place::Splitting::trivial, +1, BigInt(0), 0, 1}};
    return {Place{Place::Kind::real_embedding, Place::Splitting::trivial, +1, BigInt(0), 0, 1},
            Place{Place::Kind::real_embedding, Place::Splitting::trivial, -1, BigInt(0), 1, 1}};
}

std::vector<Place> places_above(const FieldDesc& field, const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("places_above: p must be prime");
    if (field.is_rationals()) return {Place{Place::Kind::finite, Place::Splitting::trivial, 0, p, 0, 1}};
    BigInt d(field.d);
    Place::Splitting s;
    if (p == 2) {
        long dm4 = field.d % 4, dm8 = field.d % 8;
        s = (dm4 == 2 || dm4 == 3) ? Place::Splitting::ramified
            : (dm8 == 5 ? Place::Splitting::inert : Place::Splitting::split);
    } else if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
        s = Place::Splitting::ramified;
    } else {
        s = mpz_legendre(d.get_mpz_t(), p.get_mpz_t()) == 1 ? Place::Splitting::split : Place::Splitting::inert;
    }
    if (s == Place::Splitting::split)
        return {Place{Place::Kind::finite, s, 0, p, 0, 1}, Place{Place::Kind::finite, s, 0, p, 1, 1}};
    return {Place{Place::Kind::finite, s, 0, p, 0, 2}};
}

namespace {

QuadElem sup_one(const QuadElem& y) {
    return cmp_real(y, Rational(1)) >= 0 ? y : QuadElem::embed(y.field(), Rational(1));
}

long vp(BigInt n, const BigInt& p) {
    long e = 0;
    while (sgn(n) != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

long vp_rat(const Rational& x, const BigInt& p) {
    long e = vp(x.num(), p);
    return e > 0 ? e : -vp(x.den(), p);
}

BigInt sqrt_mod(const BigInt& d, const BigInt& p) {
    BigInt dm = ((d % p) + p) % p;
    for (BigInt s = 0; s < p; ++s)
        if ((s * s - dm) % p == 0) return s;
    throw internal_inconsistency("sqrt_mod: no root for a split prime");
}

}  // namespace

HeightValue height_k(const QuadElem& x) {
    const FieldDesc& f = x.field();
    if (x.is_rational()) {
        Rational h(height_q(x.u()));
        if (f.degree() == 2) h = h * h;
        QuadElem val = QuadElem::embed(f, h);
        return {val, val.to_double()};
    }
    auto mp = quad_min_poly(x);
    QuadElem val = sup_one(x.abs()) * sup_one(x.conj().abs()) * Rational(mp[0]);
    return {val, val.to_double()};
}

HeightValue places_oracle(const QuadElem& x) {
    const FieldDesc& f = x.field();
    if (f.is_rationals()) {
        // sup(1,|x|) times p^{-v_p(x)} over the p with v_p(x) < 0; the finite
        // part is exactly den(x)
        Rational arch = x.u().abs() >= Rational(1) ? x.u().abs() : Rational(1);
        QuadElem val = QuadElem::embed(f, arch * Rational(x.u().den()));
        return {val, val.to_double()};
    }
    static const long supported[] = {2, 3, 5, 7, 13};
    if (std::find(std::begin(supported), std::end(supported), f.d) == std::end(supported))
        throw std::invalid_argument("places_oracle: unsupported d");
    QuadElem arch = sup_one(x.abs()) * sup_one(x.conj().abs());
    BigInt finite = 1;
    BigInt den = lcm(x.u().den(), x.v().den());
    if (den > 1) {
        const BigInt A = x.u().num() * (den / x.u().den());
        const BigInt C = x.v().num() * (den / x.v().den());
        const Rational N = x.norm();
        const BigInt d(f.d);
        for (auto& [p, kexp] : factorize(den)) {
            const long k = long(kexp);
            for (const Place& pl : places_above(f, p)) {
                long ord_x = 0;
                long fv = 1;
                switch (pl.splitting) {
                    case Place::Splitting::inert: {
                        long vn = vp_rat(N, p);
                        if (vn % 2 != 0)
                            throw internal_inconsistency("places_oracle: odd norm valuation at an inert prime");
                        ord_x = vn / 2;
                        fv = 2;
                        break;
                    }
                    case Place::Splitting::ramified:
                        ord_x = vp_rat(N, p);
                        break;
                    case Place::Splitting::split: {
                        BigInt s = sqrt_mod(d, p);
                        BigInt A0 = A, C0 = C;
                        long c = 0;
                        while (mpz_divisible_p(A0.get_mpz_t(), p.get_mpz_t()) &&
                               mpz_divisible_p(C0.get_mpz_t(), p.get_mpz_t())) {
                            mpz_divexact(A0.get_mpz_t(), A0.get_mpz_t(), p.get_mpz_t());
                            mpz_divexact(C0.get_mpz_t(), C0.get_mpz_t(), p.get_mpz_t());
                            ++c;
                        }
                        BigInt ny = A0 * A0 - d * C0 * C0;
                        long vny = sgn(ny) == 0 ? 0 : vp(ny, p);
                        BigInt probe = pl.index == 0 ? BigInt(A0 + C0 * s) : BigInt(A0 - C0 * s);
                        long o = mpz_divisible_p(probe.get_mpz_t(), p.get_mpz_t()) ? vny : 0;
                        ord_x = c + o - k;
                        break;
                    }
                    case Place::Splitting::trivial:
                        throw internal_inconsistency("places_oracle: trivial splitting in a quadratic field");
                }
                if (ord_x < 0) finite *= pow_ui(p, (unsigned long)(-ord_x * fv));
            }
        }
    }
    QuadElem val = arch * Rational(finite);
    return {val, val.to_double()};
}

std::vector<QuadElem> quad_roots(const KPoly& p, RootSearchStats* stats) {
    if (p.is_zero()) throw std::invalid_argument("quad_roots: zero polynomial");
    const FieldDesc field = p.coeffs().front().field();
    for (const QuadElem& c : p.coeffs())
        if (!(c.field() == field)) throw std::invalid_argument("quad_roots: mixed coefficient fields");

    RootSearchStats local;
    RootSearchStats& st = stats ? *stats : local;

    // N = p * conj(p) has rational coefficients and is fixed by conjugation,
    // so every root of p in the field is a root of N, as is its conjugate.
    std::vector<QuadElem> conj_coeffs;
    conj_coeffs.reserve(p.coeffs().size());
    for (const QuadElem& c : p.coeffs()) conj_coeffs.push_back(c.conj());
    KPoly n_k = p * KPoly(std::move(conj_coeffs));
    std::vector<Rational> n_rat;
    n_rat.reserve(n_k.coeffs().size());
    for (const QuadElem& c : n_k.coeffs()) {
        if (!c.is_rational()) throw internal_inconsistency("quad_roots: p * conj(p) not rational");
        n_rat.push_back(c.u());
    }
    IntPoly nz = clear_denominators(QPoly(std::move(n_rat))).poly;

    std::set<QuadElem, QuadValueLess> found;
    const QuadElem zero = QuadElem::embed(field, Rational(0));

    for (const Rational& r : rational_roots(nz, &st)) {
        QuadElem cand = QuadElem::embed(field, r);
        if (p.evaluate(cand) == zero) found.insert(cand);
    }

    if (!field.is_rationals() && p.degree() >= 2) {
        // The minimal polynomial mu = a2 x^2 + a1 x + a0 of a properly
        // quadratic root divides N over Z (mu primitive, Gauss), so after
        // stripping x^j and (x -+ 1)^j factors from N (all coprime to mu):
        //   a2 | lead(M),  a0 | M(0),  mu(1) | M(1),  mu(-1) | M(-1),
        //   disc(mu) = d w^2 > 0.
        // Candidates are generated from the divisor sets of lead, M(0), M(1)
        // and checked by exact evaluation of p at the reconstructed roots.
        std::size_t k = 0;
        while (coeff_is_zero(nz[k])) ++k;
        QPoly m = to_qpoly(IntPoly(std::vector<BigInt>(nz.coeffs().begin() + k, nz.coeffs().end())));
        const QPoly x_minus_1(std::vector<Rational>{Rational(-1), Rational(1)});
        const QPoly x_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
        while (m.degree() >= 1 && m.evaluate(Rational(1)).is_zero()) m = divide(m, x_minus_1).first;
        while (m.degree() >= 1 && m.evaluate(Rational(-1)).is_zero()) m = divide(m, x_plus_1).first;
        if (m.degree() >= 2) {
            IntPoly mi = clear_denominators(m).poly;
            BigInt m1 = 0, mm1 = 0;
            for (std::size_t i = 0; i < mi.coeffs().size(); ++i) {
                m1 += mi[i];
                mm1 += (i % 2) ? BigInt(-mi[i]) : mi[i];
            }
            BigInt maxc = 0;
            for (int i = 0; i < mi.degree(); ++i) maxc = std::max(maxc, BigInt(abs(mi[std::size_t(i)])));
            const BigInt bnum = abs(mi.leading()) + maxc, bden = abs(mi.leading());
            const BigInt d(field.d);
            const std::vector<BigInt> a2s = divisors(mi.leading());
            const std::vector<BigInt> a0s = divisors(mi.coeffs().front());
            const std::vector<BigInt> ts = divisors(m1);
            for (const BigInt& a2 : a2s) {
                const BigInt a1cap = (2 * a2 * bnum) / bden + 1;
                for (const BigInt& a0a : a0s) {
                    for (int s0 = 0; s0 < 2; ++s0) {
                        const BigInt a0 = s0 ? BigInt(-a0a) : a0a;
                        for (const BigInt& ta : ts) {
                            for (int s1 = 0; s1 < 2; ++s1) {
                                const BigInt t = s1 ? BigInt(-ta) : ta;
                                BigInt a1 = t - a2 - a0;
                                ++st.candidates;
                                if (abs(a1) > a1cap) { ++st.filtered; continue; }
                                BigInt mu_m1 = a2 - a1 + a0;  // mu(-1)
                                if (sgn(mu_m1) == 0 || !mpz_divisible_p(mm1.get_mpz_t(), mu_m1.get_mpz_t())) {
                                    ++st.filtered;
                                    continue;
                                }
                                if (gcd(gcd(a2, a1), a0) != 1) { ++st.filtered; continue; }
                                BigInt disc = a1 * a1 - 4 * a2 * a0;
                                if (sgn(disc) <= 0) { ++st.filtered; continue; }
                                BigInt w2q, rem;
                                mpz_fdiv_qr(w2q.get_mpz_t(), rem.get_mpz_t(), disc.get_mpz_t(), d.get_mpz_t());
                                if (sgn(rem) != 0 || !is_perfect_square(w2q)) { ++st.filtered; continue; }
                                BigInt w = isqrt(w2q);
                                ++st.evaluated;
                                Rational uu(-a1, 2 * a2), vv(w, 2 * a2);
                                QuadElem root(uu, vv, field);
                                if (p.evaluate(root) == zero) found.insert(root);
                                root = QuadElem(uu, -vv, field);
                                if (p.evaluate(root) == zero) found.insert(root);
                            }
                        }
                    }
                }
            }
        }
    }

    return {found.begin(), found.end()};
}

}  // namespace msect
