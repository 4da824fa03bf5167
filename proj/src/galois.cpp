#include "suslov/galois.hpp"

#include <algorithm>
#include <cmath>

#include "suslov/closed_form.hpp"
#include "suslov/integrator.hpp"

namespace suslov::galois {

using exact::GaussRat;
using exact::Poly;
using exact::Rational;

// ---------------------------------------------------------------------------
// chart + Riccati
// ---------------------------------------------------------------------------

ChartPair stereographic(const std::array<cplx, 3>& g) {
    const cplx i(0.0, 1.0);
    const cplx den1 = g[0] - i * g[1];
    const cplx den2 = g[2] + 1.0;
    if (std::abs(den1) < 1e-14 || std::abs(den2) < 1e-14)
        throw ChartSingularity("stereographic: chart denominator vanishes");
    return {(g[2] + 1.0) / den1, -(g[0] + i * g[1]) / den2};
}

ChartPair stereographic(const std::array<double, 3>& g) {
    return stereographic(std::array<cplx, 3>{cplx(g[0]), cplx(g[1]), cplx(g[2])});
}

std::array<cplx, 3> inverse_stereographic(cplx u1, cplx u2) {
    const cplx den = u1 - u2;
    if (std::abs(den) < 1e-14)
        throw ChartSingularity("inverse_stereographic: u1 = u2");
    const cplx i(0.0, 1.0);
    return {(1.0 - u1 * u2) / den, i * (1.0 + u1 * u2) / den, (u1 + u2) / den};
}

RiccatiCoeffs riccati_coeffs(const SuslovParams& P) {
    RiccatiCoeffs rc;
    rc.A = [P](double t) {
        const Omega w = omega_general(t, P);
        return 0.5 * cplx(w.w2, -w.w1);
    };
    rc.C = [P](double t) {
        const Omega w = omega_general(t, P);
        return 0.5 * cplx(w.w2, w.w1);
    };
    rc.C_dot = [P](double t) {
        const Omega dw = omega_general_dot(t, P);
        return 0.5 * cplx(dw.w2, dw.w1);
    };
    return rc;
}

cplx riccati_general_solution(const std::function<cplx(double)>& u0,
                              const std::function<cplx(double)>& u1,
                              const std::function<cplx(double)>& C, double t0, cplx C0, double t,
                              double tol) {
    if (std::abs(u0(t0) - u1(t0)) < 1e-13 || std::abs(u0(t) - u1(t)) < 1e-13)
        throw CoincidentSolutions("riccati_general_solution: u0 = u1 on the path");
    cplx integral(0.0);
    if (t != t0) {
        RhsFn rhs = [&](double s, const std::vector<double>&, std::vector<double>& dx) {
            const cplx g = C(s) * (u0(s) - u1(s));
            dx = {g.real(), g.imag()};
        };
        const Trajectory traj = integrate(rhs, {0.0, 0.0}, t0, t, tol, tol, 2);
        integral = cplx(traj.states.back()[0], traj.states.back()[1]);
    }
    const cplx K = C0 * std::exp(integral);
    // (u - u0)/(u - u1) = K  =>  u = (u0 - u1 K)/(1 - K)
    return (u0(t) - u1(t) * K) / (1.0 - K);
}

SecondOrderCoeffs second_order_coeffs(const SuslovParams& P) {
    const RiccatiCoeffs rc = riccati_coeffs(P);
    SecondOrderCoeffs so;
    so.A1 = [rc](double t) { return -rc.A(t) * rc.C(t); };
    so.B1 = [rc](double t) { return rc.C_dot(t) / rc.C(t); };
    return so;
}

// ---------------------------------------------------------------------------
// reduced equation
// ---------------------------------------------------------------------------

namespace {

template <typename T>
std::array<T, 9> p_table(const T& p2, const T& D, const T& ic4) {
    // ic4 = 4ic; conjugation flips its sign (c real).
    std::array<T, 9> P;
    P[0] = P[8] = D + p2;
    P[7] = ic4 * (T(2) * D + p2);
    P[1] = -P[7];
    P[2] = P[6] = T(-4) * (T(4) * D + p2);
    P[5] = ic4 * ((T(4) * p2 - T(2)) * D + p2);
    P[3] = -P[5];
    P[4] = T(-2) * ((T(-8) * D + T(8) * (D + T(2)) * p2 + T(1)) * D + T(5) * p2);
    return P;
}

template <typename T>
Poly<T> q_poly(const T& D, const T& c, const T& i) {
    // 4(c^2-1) z^2 (z^2+1)^2 (2cz - i(z^2-1))^2
    Poly<T> f{i, T(2) * c, -i}; // i + 2cz - i z^2
    f = exact::poly_mul(f, f);
    Poly<T> g{T(1), T(0), T(2), T(0), T(1)}; // (z^2+1)^2
    Poly<T> out = exact::poly_mul(f, g);
    out = exact::poly_mul(out, Poly<T>{T(0), T(0), T(4) * D});
    return out;
}

} // namespace

cplx ReducedEquation::r_table(cplx z) const {
    cplx num(0.0);
    for (size_t i = P.size(); i-- > 0;) num = num * z + P[i];
    cplx den(0.0);
    for (size_t i = Q.size(); i-- > 0;) den = den * z + Q[i];
    return num / den;
}

cplx ReducedEquation::r_from_pq(cplx z) const {
    const cplx i(0.0, 1.0);
    const cplx ic = i * c;
    // p(z) = N/Dn
    const std::array<cplx, 5> N{-1.0, 0.0, -4.0, 4.0 * ic, 1.0};
    const std::array<cplx, 6> Dn{0.0, -1.0, 2.0 * ic, 0.0, 2.0 * ic, 1.0};
    auto ev = [&](const auto& a) {
        cplx s(0.0);
        for (size_t k = a.size(); k-- > 0;) s = s * z + a[k];
        return s;
    };
    auto evd = [&](const auto& a) {
        cplx s(0.0);
        for (size_t k = a.size(); k-- > 1;) s = s * z + a[k] * static_cast<double>(k);
        return s;
    };
    const cplx n = ev(N), dn = ev(Dn), np = evd(N), dnp = evd(Dn);
    const cplx pz = n / dn;
    const cplx pprime = (np * dn - n * dnp) / (dn * dn);
    const double p2 = p * p;
    const cplx qz = p2 / (4.0 * (c * c - 1.0)) / (z * z) + p2 / ((z * z + 1.0) * (z * z + 1.0));
    return 0.5 * pprime + 0.25 * pz * pz - qz;
}

ReducedEquation reduced_equation(double p, double c) {
    if (c == 1.0 || c == -1.0) throw DegenerateC("reduced_equation: c = +-1");
    if (p == 0.0) throw InvalidInput("reduced_equation: p = 0");
    ReducedEquation eq;
    eq.p = p;
    eq.c = c;
    eq.d = std::sqrt(c * c - 1.0);
    const cplx D(c * c - 1.0), p2(p * p), ic4(0.0, 4.0 * c);
    eq.P = p_table(p2, D, ic4);
    eq.Q = q_poly(D, cplx(c), cplx(0.0, 1.0));
    return eq;
}

// ---------------------------------------------------------------------------
// Laurent data of r at a singular point (templated on the coefficient field)
// ---------------------------------------------------------------------------

namespace {

template <typename T>
struct LaurentR {
    std::vector<T> coef; // coef[m] multiplies zeta^(m-2)
};

// divides by (z - s), requiring an (almost) zero remainder
template <typename T>
Poly<T> deflate(const Poly<T>& a, const T& s, double rem_tol) {
    Poly<T> q(a.size() - 1, T(0));
    T carry = a.back();
    for (size_t k = a.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = a[k] + s * carry;
    }
    if constexpr (std::is_same_v<T, GaussRat>) {
        if (!carry.is_zero()) throw InvalidInput("deflate: not a root");
        (void)rem_tol;
    } else {
        double scale = 0.0;
        for (const T& v : a) scale = std::max(scale, std::abs(v));
        if (std::abs(carry) > rem_tol * scale) throw InvalidInput("deflate: not a root");
    }
    return q;
}

template <typename T>
LaurentR<T> laurent_at(const Poly<T>& P, const Poly<T>& Q, const T& s, bool at_infinity,
                       size_t nterms) {
    Poly<T> A, B;
    if (at_infinity) {
        A = exact::poly_reverse(P, 9);
        B = exact::poly_reverse(Q, 11);
    } else {
        Poly<T> Qt = deflate(Q, s, 1e-9);
        Qt = deflate(Qt, s, 1e-9);
        A = exact::poly_shift(P, s);
        B = exact::poly_shift(Qt, s);
    }
    const Poly<T> Binv = exact::poly_series_inverse(B, nterms);
    LaurentR<T> out;
    out.coef.assign(nterms, T(0));
    for (size_t m = 0; m < nterms; ++m)
        for (size_t j = 0; j <= m && j < A.size(); ++j)
            out.coef[m] = out.coef[m] + A[j] * Binv[m - j];
    return out;
}

} // namespace

std::vector<SingularPointData> singular_exponents(const ReducedEquation& eqn) {
    const cplx i(0.0, 1.0);
    const Poly<cplx> P(eqn.P.begin(), eqn.P.end());
    const Poly<cplx> Q = eqn.Q;
    const std::array<std::pair<SingPoint, cplx>, 6> pts{{
        {SingPoint::S0_zero, cplx(0.0)},
        {SingPoint::S1_plus_i, i},
        {SingPoint::S2_minus_i, -i},
        {SingPoint::S3, -i * (eqn.c + eqn.d)},
        {SingPoint::S4, -i * (eqn.c - eqn.d)},
        {SingPoint::S5_infinity, cplx(0.0)},
    }};
    std::vector<SingularPointData> out;
    for (const auto& [which, loc] : pts) {
        const bool inf = (which == SingPoint::S5_infinity);
        const auto lr = laurent_at<cplx>(P, Q, loc, inf, 3);
        const cplx rm2 = lr.coef[0];
        const cplx delta = std::sqrt(1.0 + 4.0 * rm2);
        SingularPointData sp;
        sp.which = which;
        sp.location = loc;
        sp.delta = delta;
        if (inf) {
            sp.exponents = {-0.5 * (1.0 + delta), -0.5 * (1.0 - delta)};
        } else {
            sp.exponents = {0.5 * (1.0 + delta), 0.5 * (1.0 - delta)};
        }
        out.push_back(sp);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Frobenius logarithm detection
// ---------------------------------------------------------------------------

RationalCD default_rational_cd() {
    return RationalCD{Rational(5) / 4, Rational(3) / 4};
}

namespace {

int delta_of(SingPoint where, int p) {
    switch (where) {
        case SingPoint::S1_plus_i:
        case SingPoint::S2_minus_i:
            return std::abs(p);
        case SingPoint::S3:
        case SingPoint::S4:
            return 2;
        default:
            throw NonResonant("frobenius_log_test: exponent difference is not a nonnegative integer");
    }
}

template <typename T, typename Rat>
FrobeniusResult frobenius_core(const std::vector<T>& rser, const Rat& rho, int delta,
                               double zero_tol) {
    // u_n [(rho+n)(rho+n-1) - r_{-2}] = sum_{m=1}^n rser[m] u_{n-m}
    std::vector<T> u(delta + 1, T(0));
    u[0] = T(1);
    FrobeniusResult res;
    res.resonance_order = delta;
    for (int n = 1; n <= delta; ++n) {
        T rhs(0);
        for (int m = 1; m <= n; ++m) rhs = rhs + rser[m] * u[n - m];
        const Rat rn = rho + Rat(n);
        const T lhs = T(rn * (rn - Rat(1))) - rser[0];
        if (n == delta) {
            if constexpr (std::is_same_v<T, GaussRat>) {
                if (!lhs.is_zero()) throw InvalidInput("frobenius: indicial mismatch at resonance");
                res.obstruction_zero = rhs.is_zero();
            } else {
                double scale = 1.0;
                for (const T& v : u) scale = std::max(scale, std::abs(v));
                res.obstruction_zero = std::abs(rhs) <= zero_tol * scale;
            }
            res.logarithmic = !res.obstruction_zero;
            return res;
        }
        u[n] = rhs / lhs;
    }
    return res; // delta = 0 never happens here (p != 0)
}

} // namespace

FrobeniusResult frobenius_log_test(int p, const RationalCD& cd, SingPoint where, int nterms) {
    if (p == 0) throw InvalidInput("frobenius_log_test: p = 0");
    if (cd.c * cd.c - cd.d * cd.d != 1)
        throw InvalidInput("frobenius_log_test: c^2 - d^2 = 1 required for the exact mode");
    const int delta = delta_of(where, p);
    if (nterms < delta + 5) throw InvalidInput("frobenius_log_test: nterms < Delta + 5");

    const GaussRat i = exact::gauss_i();
    const GaussRat c(cd.c), d(cd.d);
    const GaussRat D = c * c - GaussRat(1);
    const GaussRat p2(Rational(p) * p);
    const auto P = p_table<GaussRat>(p2, D, GaussRat(Rational(4)) * i * c);
    const auto Q = q_poly<GaussRat>(D, c, i);

    GaussRat s;
    switch (where) {
        case SingPoint::S1_plus_i: s = i; break;
        case SingPoint::S2_minus_i: s = -i; break;
        case SingPoint::S3: s = -i * (c + d); break;
        case SingPoint::S4: s = -i * (c - d); break;
        default: throw NonResonant("frobenius_log_test: nonresonant point");
    }
    const Poly<GaussRat> Pv(P.begin(), P.end());
    const auto lr = laurent_at<GaussRat>(Pv, Q, s, false, static_cast<size_t>(nterms));

    // sanity: r_{-2} = (Delta^2 - 1)/4
    const Rational expect = (Rational(delta) * delta - 1) / 4;
    if (!(lr.coef[0] == GaussRat(expect)))
        throw InvalidInput("frobenius_log_test: indicial equation mismatch");

    const Rational rho = Rational(1 - delta) / 2;
    return frobenius_core<GaussRat, Rational>(lr.coef, rho, delta, 0.0);
}

FrobeniusResult frobenius_log_test_float(const ReducedEquation& eqn, SingPoint where, int delta,
                                         int nterms) {
    if (nterms < delta + 5) throw InvalidInput("frobenius_log_test_float: nterms < Delta + 5");
    const cplx i(0.0, 1.0);
    cplx s;
    switch (where) {
        case SingPoint::S1_plus_i: s = i; break;
        case SingPoint::S2_minus_i: s = -i; break;
        case SingPoint::S3: s = -i * (eqn.c + eqn.d); break;
        case SingPoint::S4: s = -i * (eqn.c - eqn.d); break;
        default: throw NonResonant("frobenius_log_test_float: nonresonant point");
    }
    const Poly<cplx> P(eqn.P.begin(), eqn.P.end());
    const auto lr = laurent_at<cplx>(P, eqn.Q, s, false, static_cast<size_t>(nterms));
    const double rho = 0.5 * (1.0 - delta);
    return frobenius_core<cplx, double>(lr.coef, rho, delta, 1e-20);
}

// ---------------------------------------------------------------------------
// degree bound + verdict
// ---------------------------------------------------------------------------

DegreeBound exponential_degree_bound(int p) {
    if (p == 0) throw InvalidInput("exponential_degree_bound: p = 0");
    DegreeBound b;
    const long q = std::abs(p);
    // rho0 + rho5 = 0 forced; s1, s2 pinned at the non-logarithmic exponent;
    // s3, s4 contribute {3, 1, -1} to the exponent sum.
    for (long extra : {1L, -1L, -3L}) b.candidates.push_back(-q + extra - 1);
    b.all_negative = true;
    for (long n : b.candidates)
        if (n >= 0) b.all_negative = false;
    return b;
}

std::string to_string(LiouvillianVerdict v) {
    switch (v) {
        case LiouvillianVerdict::Solvable_OddP: return "Solvable_OddP";
        case LiouvillianVerdict::NotLiouvillian_EvenP: return "NotLiouvillian_EvenP";
        case LiouvillianVerdict::Unknown: return "Unknown";
    }
    return "?";
}

VerdictReport liouvillian_verdict(int p, bool rerun_beyond, const RationalCD& cd) {
    VerdictReport r;
    if (p == 0) {
        r.note = "p = 0 is outside the classification";
        return r;
    }
    if (std::abs(p) % 2 == 1) {
        r.verdict = LiouvillianVerdict::Solvable_OddP;
        r.note = "explicit meromorphic solutions exist for odd p";
        return r;
    }
    r.bound = exponential_degree_bound(p);
    if (std::abs(p) > 10 && !rerun_beyond) {
        r.note = "beyond the verified range |p| <= 10; rerun the certificate to decide";
        return r;
    }
    const auto fr = frobenius_log_test(p, cd, SingPoint::S1_plus_i, std::abs(p) + 8);
    r.frobenius_ran = true;
    r.logarithmic_at_s1 = fr.logarithmic;
    if (fr.logarithmic && r.bound.all_negative) {
        r.verdict = LiouvillianVerdict::NotLiouvillian_EvenP;
        r.note = "logarithm at s1 and empty exponential-solution set";
    } else {
        r.note = "certificates inconclusive";
    }
    return r;
}

} // namespace suslov::galois
