#include "suslov/integrals.hpp"

#include <cmath>
#include <sstream>

#include "suslov/hyper.hpp"

namespace suslov::integrals {

using exact::Poly;
using exact::RatFunc;
using exact::Rational;

namespace {

RatFunc ratD() { return RatFunc::variable(); } // the symbol D = d^2

HomogeneousPoly2 hp_zero(int degree) {
    HomogeneousPoly2 h;
    h.degree = degree;
    h.coef.assign(degree + 1, RatFunc(0));
    return h;
}

HomogeneousPoly2 hp_add(const HomogeneousPoly2& a, const HomogeneousPoly2& b) {
    if (a.degree != b.degree || a.odd_in_d != b.odd_in_d)
        throw InvalidInput("hp_add: mismatched degrees or d-parity");
    HomogeneousPoly2 out = a;
    for (int i = 0; i <= a.degree; ++i) out.coef[i] = out.coef[i] + b.coef[i];
    return out;
}

HomogeneousPoly2 hp_mul(const HomogeneousPoly2& a, const HomogeneousPoly2& b) {
    HomogeneousPoly2 out = hp_zero(a.degree + b.degree);
    out.odd_in_d = (a.odd_in_d != b.odd_in_d);
    for (int i = 0; i <= a.degree; ++i)
        for (int j = 0; j <= b.degree; ++j)
            out.coef[i + j] = out.coef[i + j] + a.coef[i] * b.coef[j];
    return out;
}

HomogeneousPoly2 hp_scale(const HomogeneousPoly2& a, const RatFunc& s) {
    HomogeneousPoly2 out = a;
    for (auto& c : out.coef) c = c * s;
    return out;
}

HomogeneousPoly2 hp_mul_w1(const HomogeneousPoly2& a) {
    HomogeneousPoly2 out = hp_zero(a.degree + 1);
    out.odd_in_d = a.odd_in_d;
    for (int i = 0; i <= a.degree; ++i) out.coef[i + 1] = a.coef[i];
    return out;
}

HomogeneousPoly2 hp_mul_w2(const HomogeneousPoly2& a) {
    HomogeneousPoly2 out = hp_zero(a.degree + 1);
    out.odd_in_d = a.odd_in_d;
    for (int i = 0; i <= a.degree; ++i) out.coef[i] = a.coef[i];
    return out;
}

HomogeneousPoly2 hp_d_w1(const HomogeneousPoly2& a) {
    HomogeneousPoly2 out = hp_zero(std::max(0, a.degree - 1));
    out.odd_in_d = a.odd_in_d;
    for (int i = 1; i <= a.degree; ++i) out.coef[i - 1] = a.coef[i] * RatFunc(i);
    return out;
}

HomogeneousPoly2 hp_d_w2(const HomogeneousPoly2& a) {
    HomogeneousPoly2 out = hp_zero(std::max(0, a.degree - 1));
    out.odd_in_d = a.odd_in_d;
    for (int i = 0; i < a.degree; ++i) out.coef[i] = a.coef[i] * RatFunc(a.degree - i);
    return out;
}

HomogeneousPoly2 hp_div_w1(const HomogeneousPoly2& a) {
    if (!a.coef.empty() && !a.coef[0].is_zero())
        throw DivisionObstruction("hp_div_w1: monomial with zero w1 power");
    HomogeneousPoly2 out = hp_zero(a.degree - 1);
    out.odd_in_d = a.odd_in_d;
    for (int i = 1; i <= a.degree; ++i) out.coef[i - 1] = a.coef[i];
    return out;
}

/// L[P] = (1/(D+1)) dP/dw1 * w2 - dP/dw2 * w1
HomogeneousPoly2 hp_L(const HomogeneousPoly2& a) {
    const RatFunc inv = RatFunc(1) / (ratD() + RatFunc(1));
    return hp_add(hp_scale(hp_mul_w2(hp_d_w1(a)), inv),
                  hp_scale(hp_mul_w1(hp_d_w2(a)), RatFunc(-1)));
}

/// Exact coefficients of the terminating F1 polynomial over Q(D).
std::vector<RatFunc> f1_coeffs_exact(int p) {
    const int jmax = (p - 1) / 2;
    std::vector<RatFunc> c(jmax + 1, RatFunc(0));
    c[0] = RatFunc(1);
    const RatFunc D = ratD();
    for (int j = 0; j < jmax; ++j) {
        const long m = 2 * j + 1;
        const Rational num = Rational(m) / 2 * (Rational(m) * m - Rational(p) * p) / 4;
        const RatFunc den = (D * RatFunc(m * m) + RatFunc(Rational(p) * p)) / (RatFunc(4) * D) *
                            RatFunc(j + 1);
        c[j + 1] = c[j] * RatFunc(num) / den;
    }
    return c;
}

} // namespace

double HomogeneousPoly2::eval(double d, double w1, double w2) const {
    const double D = d * d;
    double s = 0.0;
    for (int i = 0; i <= degree; ++i)
        s += coef[i].eval_double(D) * std::pow(w1, i) * std::pow(w2, degree - i);
    return odd_in_d ? d * s : s;
}

bool HomogeneousPoly2::is_zero() const {
    for (const auto& c : coef)
        if (!c.is_zero()) return false;
    return true;
}

bool HomogeneousPoly2::even_in_w1() const {
    for (int i = 1; i <= degree; i += 2)
        if (!coef[i].is_zero()) return false;
    return true;
}

bool HomogeneousPoly2::even_in_w2() const {
    for (int i = 0; i <= degree; ++i)
        if ((degree - i) % 2 != 0 && !coef[i].is_zero()) return false;
    return true;
}

HomogeneousPoly2 q_polynomial(int p) {
    if (p < 1 || p % 2 == 0) throw ParityError("q_polynomial: p must be odd and positive");
    const int half = (p - 1) / 2;
    const auto c = f1_coeffs_exact(p);

    // F1 = (D+1) w1^2 + w2^2
    HomogeneousPoly2 F1 = hp_zero(2);
    F1.coef[2] = ratD() + RatFunc(1);
    F1.coef[0] = RatFunc(1);

    // Q = sum_j c_j w2^(2j) F1^(half-j)
    HomogeneousPoly2 acc = hp_zero(p - 1);
    for (int j = 0; j <= half; ++j) {
        HomogeneousPoly2 term = hp_zero(0);
        term.coef[0] = c[j];
        for (int k = 0; k < half - j; ++k) term = hp_mul(term, F1);
        for (int k = 0; k < 2 * j; ++k) term = hp_mul_w2(term);
        acc = hp_add(acc, term);
    }
    return acc;
}

ExtraIntegral build_extra_integral(int p) {
    if (p < 1 || p % 2 == 0)
        throw ParityError("build_extra_integral: p must be odd and positive");
    ExtraIntegral E;
    E.p = p;
    E.P1 = hp_mul_w1(q_polynomial(p));

    // P3 = -(d/p) L[P1]; stored as d * P3hat
    const RatFunc invp = RatFunc(1) / RatFunc(p);
    E.P3 = hp_scale(hp_L(E.P1), -invp);
    E.P3.odd_in_d = true;

    // P2 = (w2/w1) (P1 - (D/p) L[P3hat]);  d^2 = D
    HomogeneousPoly2 L3 = hp_L(E.P3);
    L3.odd_in_d = false; // absorb d * d = D below
    HomogeneousPoly2 inner = hp_add(E.P1, hp_scale(L3, -(ratD() * invp)));
    E.P2 = hp_div_w1(hp_mul_w2(inner));
    return E;
}

PdeResiduals verify_pde_system(const ExtraIntegral& E) {
    const RatFunc invp = RatFunc(1) / RatFunc(E.p);
    PdeResiduals R;

    // (d/p) L[P1] + P3 = d [ (1/p) L[P1] + P3hat ]
    HomogeneousPoly2 P3hat = E.P3;
    P3hat.odd_in_d = false;
    R.r1 = hp_add(hp_scale(hp_L(E.P1), invp), P3hat);

    // (d/p) L[P2] w2 - P3 w1 = d [ (1/p) L[P2] w2 - P3hat w1 ]
    R.r2 = hp_add(hp_scale(hp_mul_w2(hp_L(E.P2)), invp),
                  hp_scale(hp_mul_w1(P3hat), RatFunc(-1)));

    // (d/p) L[P3] w2 + P2 w1 - P1 w2 = (D/p) L[P3hat] w2 + P2 w1 - P1 w2
    R.r3 = hp_add(hp_add(hp_scale(hp_mul_w2(hp_L(P3hat)), ratD() * invp), hp_mul_w1(E.P2)),
                  hp_scale(hp_mul_w2(E.P1), RatFunc(-1)));
    return R;
}

bool PdeResiduals::all_zero() const { return r1.is_zero() && r2.is_zero() && r3.is_zero(); }

double f3_evaluate(const ExtraIntegral& E, double d, const BodyState& x) {
    return E.P1.eval(d, x.w1, x.w2) * x.g1 + E.P2.eval(d, x.w1, x.w2) * x.g2 +
           E.P3.eval(d, x.w1, x.w2) * x.g3;
}

OdeCheckResult third_order_ode_check(int p, double d) {
    if (p < 1 || p % 2 == 0)
        throw ParityError("third_order_ode_check: p must be odd and positive");
    const ExtraIntegral E = build_extra_integral(p);

    // p1(w) = P1(1, w): univariate over Q(D), ascending in w
    Poly<RatFunc> p1(E.p + 1, RatFunc(0));
    for (int i = 0; i <= E.P1.degree; ++i) p1[E.P1.degree - i] = E.P1.coef[i];
    exact::poly_trim(p1);

    const RatFunc D = ratD();
    const RatFunc one(1);
    const Poly<RatFunc> S{D + one, RatFunc(0), one}; // 1 + D + w^2
    const Poly<RatFunc> w{RatFunc(0), one};

    auto pw = [&](const Poly<RatFunc>& a, int k) {
        Poly<RatFunc> out{one};
        for (int i = 0; i < k; ++i) out = exact::poly_mul(out, a);
        return out;
    };
    const auto d1 = exact::poly_derivative(p1);
    const auto d2 = exact::poly_derivative(d1);
    const auto d3 = exact::poly_derivative(d2);

    const Rational pr(p);
    // multiplier M = D w^2 (1+D+w^2)^3; M q1, M q2, M q3 are polynomials
    const Poly<RatFunc> M =
        exact::poly_mul(exact::poly_mul(Poly<RatFunc>{RatFunc(0), RatFunc(0), D}, pw(S, 3)),
                        Poly<RatFunc>{one});
    const Poly<RatFunc> Mq1 = exact::poly_sub(
        exact::poly_mul(exact::poly_mul(Poly<RatFunc>{RatFunc(0), D}, pw(S, 3)), Poly<RatFunc>{one}),
        exact::poly_scale(
            exact::poly_mul(exact::poly_mul(Poly<RatFunc>{RatFunc(0), RatFunc(0), RatFunc(0), D},
                                            pw(S, 2)),
                            Poly<RatFunc>{one}),
            RatFunc(Rational(3) * (pr - 2))));
    // M q2 = S * [ D w^2 (-(1+D)(5p-4) + (p-1)(3p-8) w^2) + (1+D)^2 (1+w^2) p^2 ]
    const RatFunc Dp1 = D + one;
    Poly<RatFunc> inner2 = exact::poly_add(
        exact::poly_mul(Poly<RatFunc>{RatFunc(0), RatFunc(0), D},
                        Poly<RatFunc>{-(Dp1 * RatFunc(Rational(5) * pr - 4)), RatFunc(0),
                                      RatFunc((pr - 1) * (Rational(3) * pr - 8))}),
        exact::poly_scale(Poly<RatFunc>{one, RatFunc(0), one}, Dp1 * Dp1 * RatFunc(pr * pr)));
    const Poly<RatFunc> Mq2 = exact::poly_mul(S, inner2);
    // M q3 = -w [ D p ((1+D)^2 - 4(1+D)(p-1) w^2 + (3+(p-4)p) w^4)
    //             - (1+D)^2 (D - (p-1)(1+w^2)) p^2 ]
    Poly<RatFunc> inner3 = exact::poly_sub(
        exact::poly_scale(Poly<RatFunc>{Dp1 * Dp1, RatFunc(0),
                                        -(RatFunc(4) * Dp1 * RatFunc(pr - 1)), RatFunc(0),
                                        RatFunc(Rational(3) + (pr - 4) * pr)},
                          D * RatFunc(pr)),
        exact::poly_scale(Poly<RatFunc>{D - RatFunc(pr - 1), -(RatFunc(0)), RatFunc(-(pr - 1))},
                          Dp1 * Dp1 * RatFunc(pr * pr)));
    const Poly<RatFunc> Mq3 = exact::poly_scale(exact::poly_mul(w, inner3), RatFunc(-1));

    Poly<RatFunc> resid = exact::poly_mul(M, d3);
    resid = exact::poly_add(resid, exact::poly_mul(Mq1, d2));
    resid = exact::poly_add(resid, exact::poly_mul(Mq2, d1));
    resid = exact::poly_add(resid, exact::poly_mul(Mq3, p1));

    OdeCheckResult out;
    out.residual_zero = exact::poly_is_zero(resid);

    // v(z) = p1(w) (z-1)^{(p-1)/2} must be a constant multiple of the F1 series
    double ratio_min = 1e300, ratio_max = -1e300, ratio0 = 0.0;
    for (double wv : {0.3, 0.9, 1.7, 2.6}) {
        double p1v = 0.0;
        for (size_t k = p1.size(); k-- > 0;) p1v = p1v * wv + p1[k].eval_double(d * d);
        const double F1v = (d * d + 1.0) + wv * wv;
        const double z = wv * wv / F1v;
        const double v = p1v * std::pow(1.0 - z, 0.5 * (p - 1)); // |z-1| = 1-z here
        const double f1 = hyper::f1_series(p, d, z).value.real();
        const double ratio = v / f1;
        ratio0 = ratio;
        ratio_min = std::min(ratio_min, ratio);
        ratio_max = std::max(ratio_max, ratio);
    }
    out.ratio = ratio0;
    out.proportionality_spread = ratio_max - ratio_min;
    return out;
}

std::vector<CoeffEntry> coefficient_table(const HomogeneousPoly2& P, double d) {
    std::vector<CoeffEntry> out;
    for (int i = 0; i <= P.degree; ++i) {
        if (P.coef[i].is_zero()) continue;
        CoeffEntry e;
        e.i = i;
        e.j = P.degree - i;
        std::ostringstream ns, ds;
        for (size_t k = 0; k < P.coef[i].num.size(); ++k) {
            if (k) ns << " ";
            ns << P.coef[i].num[k];
        }
        for (size_t k = 0; k < P.coef[i].den.size(); ++k) {
            if (k) ds << " ";
            ds << P.coef[i].den[k];
        }
        e.num = ns.str();
        e.den = ds.str();
        e.value = P.coef[i].eval_double(d * d) * (P.odd_in_d ? d : 1.0);
        out.push_back(e);
    }
    return out;
}

} // namespace suslov::integrals
