#include "suslov/meromorphic.hpp"

#include <algorithm>
#include <cmath>

#include "suslov/hyper.hpp"

namespace suslov::meromorphic {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Coeffs = std::vector<cplx>;

Coeffs polymul(const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size() - 1, cplx(0.0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

double max_abs(const Coeffs& c) {
    double m = 0.0;
    for (const cplx& v : c) m = std::max(m, std::abs(v));
    return m;
}

void trim(PhasedRational& f) {
    const double eps = 1e-13 * std::max(max_abs(f.coef), 1e-300);
    size_t lo = 0, hi = f.coef.size();
    while (lo < hi && std::abs(f.coef[lo]) <= eps) ++lo;
    while (hi > lo && std::abs(f.coef[hi - 1]) <= eps) --hi;
    f.coef = Coeffs(f.coef.begin() + lo, f.coef.begin() + hi);
    f.low += static_cast<int>(lo);
    if (f.coef.empty()) {
        f.coef = {cplx(0.0)};
        f.low = 0;
    }
}

} // namespace

cplx PhasedRational::eval(cplx t) const {
    const cplx phase = std::exp(mu * t);
    cplx sum(0.0);
    if (t.real() < 0.0) {
        // x = e^t is small; direct Laurent sum
        for (size_t k = 0; k < coef.size(); ++k)
            sum += coef[k] * std::exp(t * static_cast<double>(low + static_cast<int>(k)));
        const cplx den = std::pow(1.0 + std::exp(2.0 * t), denom_pow);
        return phase * sum / den;
    }
    // factor x^(2 denom_pow) out of the denominator
    for (size_t k = 0; k < coef.size(); ++k)
        sum += coef[k] *
               std::exp(t * static_cast<double>(low + static_cast<int>(k) - 2 * denom_pow));
    const cplx den = std::pow(1.0 + std::exp(-2.0 * t), denom_pow);
    return phase * sum / den;
}

PhasedRational PhasedRational::dt() const {
    // d/dt [e^(mu t) N(x)/(1+x^2)^m] =
    //   e^(mu t) [(mu N + x N')(1+x^2) - 2m x^2 N] / (1+x^2)^(m+1)
    PhasedRational out;
    out.mu = mu;
    out.low = low;
    out.denom_pow = denom_pow + 1;
    Coeffs t1(coef.size());
    for (size_t k = 0; k < coef.size(); ++k)
        t1[k] = coef[k] * (mu + static_cast<double>(low + static_cast<int>(k)));
    Coeffs num = polymul(t1, {cplx(1.0), cplx(0.0), cplx(1.0)});
    num.resize(std::max(num.size(), coef.size() + 2), cplx(0.0));
    for (size_t k = 0; k < coef.size(); ++k)
        num[k + 2] -= 2.0 * static_cast<double>(denom_pow) * coef[k];
    out.coef = std::move(num);
    trim(out);
    return out;
}

PhasedRational PhasedRational::shift(int k) const {
    PhasedRational out = *this;
    out.low += k;
    return out;
}

PhasedRational PhasedRational::scaled(cplx s) const {
    PhasedRational out = *this;
    for (cplx& c : out.coef) c *= s;
    return out;
}

PhasedRational PhasedRational::conjugated() const {
    PhasedRational out = *this;
    out.mu = std::conj(out.mu);
    for (cplx& c : out.coef) c = std::conj(c);
    return out;
}

std::array<cplx, 3> GammaSolution::eval(cplx t) const {
    std::array<cplx, 3> out{};
    for (int j = 0; j < 3; ++j)
        for (const auto& h : comp[j]) out[j] += h.eval(t);
    return out;
}

std::array<cplx, 3> GammaSolution::eval_dt(cplx t) const {
    std::array<cplx, 3> out{};
    for (int j = 0; j < 3; ++j)
        for (const auto& h : comp[j]) out[j] += h.dt().eval(t);
    return out;
}

std::array<double, 3> GammaSolution::eval_real(double t) const {
    const auto v = eval(cplx(t, 0.0));
    return {v[0].real(), v[1].real(), v[2].real()};
}

std::vector<double> ak_coefficients(int p, double d) {
    auto c = hyper::f1_polynomial(p, d); // throws ParityError for bad p
    double four = 1.0;
    for (size_t k = 0; k < c.size(); ++k) {
        c[k] *= four;
        four *= 4.0;
    }
    return c;
}

std::vector<cplx> bk_coefficients(int p, double d) {
    return hyper::f23_polynomials(p, d, +1);
}

Gamma1Form make_gamma1_form(Gamma1Kind kind, int p, double d) {
    if (p < 1 || p % 2 == 0)
        throw ParityError("make_gamma1_form: p must be odd and positive");
    Gamma1Form f;
    f.kind = kind;
    f.p = p;
    f.d = d;
    PhasedRational& h = f.handle;
    h.denom_pow = p;
    if (kind == Gamma1Kind::Symmetric) {
        // (x^2-1) sum_k a_k x^(2k) (x^2+1)^(p-1-2k), all real
        const auto a = ak_coefficients(p, d);
        Coeffs acc{cplx(0.0)};
        for (size_t k = 0; k < a.size(); ++k) {
            Coeffs term(2 * k, cplx(0.0)); // a_k x^(2k)
            term.push_back(cplx(a[k]));
            const int pw = p - 1 - 2 * static_cast<int>(k);
            for (int i = 0; i < pw; ++i) term = polymul(term, {cplx(1.0), cplx(0.0), cplx(1.0)});
            if (term.size() > acc.size()) acc.resize(term.size(), cplx(0.0));
            for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
        }
        acc = polymul(acc, {cplx(-1.0), cplx(0.0), cplx(1.0)}); // * (x^2 - 1)
        h.mu = 0.0;
        h.low = 0;
        h.coef = std::move(acc);
    } else {
        const auto b = bk_coefficients(p, d);
        Coeffs n;
        for (const cplx& bk : b) {
            n.push_back(kind == Gamma1Kind::RotatingPlus ? bk : std::conj(bk));
            n.push_back(cplx(0.0));
        }
        n.pop_back(); // P(x^2): even powers only, starting at x^1 via low
        h.mu = cplx(0.0, (kind == Gamma1Kind::RotatingPlus ? 1.0 : -1.0) * p / d);
        h.low = 1;
        h.coef = std::move(n);
    }
    trim(f.handle);
    return f;
}

cplx gamma1_eval(const Gamma1Form& form, cplx t) {
    // poles at t = i pi/2 (mod i pi)
    const double n = std::round((t.imag() - kPi / 2.0) / kPi);
    const cplx nearest(0.0, kPi / 2.0 + n * kPi);
    if (std::abs(t - nearest) < 1e-12)
        throw PoleHit("gamma1_eval: t within 1e-12 of a pole");
    return form.handle.eval(t);
}

namespace {

// Laurent division by (x^2 - 1); the remainder must vanish.
PhasedRational divide_x2m1(const PhasedRational& u) {
    const Coeffs& c = u.coef;
    if (c.size() < 3) {
        if (max_abs(c) > 1e-9)
            throw DivisionObstruction("divide_x2m1: numerator too short");
        PhasedRational out = u;
        out.coef = {cplx(0.0)};
        return out;
    }
    const size_t n = c.size();
    Coeffs v(n - 2, cplx(0.0));
    // (x^2-1)V: coeff_j = v_{j-2} - v_j; solve ascending
    for (size_t j = 0; j < n - 2; ++j) {
        const cplx prev = (j >= 2) ? v[j - 2] : cplx(0.0);
        v[j] = prev - c[j];
    }
    const cplx r1 = (n - 2 >= 2 ? v[n - 4] : cplx(0.0)) - c[n - 2];
    const cplx r2 = (n - 2 >= 1 ? v[n - 3] : cplx(0.0)) - c[n - 1];
    const double scale = std::max(max_abs(c), 1e-300);
    if (std::abs(r1) > 1e-9 * scale || std::abs(r2) > 1e-9 * scale)
        throw DivisionObstruction("divide_x2m1: nonzero remainder");
    PhasedRational out = u;
    out.coef = std::move(v);
    trim(out);
    return out;
}

} // namespace

std::array<PhasedRational, 3> complete_gamma(const Gamma1Form& form) {
    const double p = form.p, d = form.d;
    const double a = p / d;
    const double c = std::sqrt(d * d + 1.0);
    const double ac = a * c;

    const PhasedRational& g1 = form.handle; // denom_pow = p
    // gamma3 = -g1dot/omega2 = g1dot * (1+x^2)/(2 a c x)
    PhasedRational g1d = g1.dt(); // denom_pow = p+1
    PhasedRational g3 = g1d.shift(-1).scaled(1.0 / (2.0 * ac));
    g3.denom_pow -= 1; // the explicit (1+x^2) factor cancels one power

    // gamma2 = (omega2 g1 - g3dot)/omega1 = [U/(x^2-1)] / (a (1+x^2)^p),
    // U = -2ac x N_1 - M_3 over (1+x^2)^(p+1)
    PhasedRational g3d = g3.dt(); // denom_pow = p+1
    PhasedRational w2g1 = g1.shift(1).scaled(-2.0 * ac);
    w2g1.denom_pow += 1; // bring to common denominator by *(1+x^2)/(1+x^2)
    Coeffs w2g1n = polymul(w2g1.coef, {cplx(1.0), cplx(0.0), cplx(1.0)});

    // align Laurent offsets of w2g1n (low = w2g1.low) and g3d
    const int lowU = std::min(w2g1.low, g3d.low);
    const size_t lenU = std::max(w2g1n.size() + (w2g1.low - lowU),
                                 g3d.coef.size() + (g3d.low - lowU));
    Coeffs U(lenU, cplx(0.0));
    for (size_t i = 0; i < w2g1n.size(); ++i) U[i + (w2g1.low - lowU)] += w2g1n[i];
    for (size_t i = 0; i < g3d.coef.size(); ++i) U[i + (g3d.low - lowU)] -= g3d.coef[i];

    PhasedRational u;
    u.mu = g1.mu;
    u.low = lowU;
    u.coef = std::move(U);
    u.denom_pow = form.p + 1;
    trim(u);
    PhasedRational g2 = divide_x2m1(u).scaled(1.0 / a);
    g2.denom_pow -= 1;

    return {g1, g2, g3};
}

std::array<GammaSolution, 3> solution_triple(int p, double d) {
    const auto sym = complete_gamma(make_gamma1_form(Gamma1Kind::Symmetric, p, d));
    GammaSolution s1;
    for (int j = 0; j < 3; ++j) s1.comp[j] = {sym[j]};

    auto rot_form = make_gamma1_form(Gamma1Kind::RotatingPlus, p, d);
    const cplx b0 = rot_form.handle.coef.front(); // leading coefficient b_0
    rot_form.handle = rot_form.handle.scaled(1.0 / b0);
    const auto rot = complete_gamma(rot_form);

    // real and imaginary combinations; their common norm is constant in t
    double norm2 = 0.0;
    for (int j = 0; j < 3; ++j) {
        const cplx v = rot[j].eval(cplx(0.25, 0.0));
        const double re = v.real();
        norm2 += re * re;
    }
    const double N = 1.0 / std::sqrt(norm2);

    GammaSolution s2, s3;
    const cplx half(0.5 * N, 0.0);
    const cplx halfi(0.0, -0.5 * N); // 1/(2i) = -i/2
    for (int j = 0; j < 3; ++j) {
        const PhasedRational cj = rot[j].conjugated();
        s2.comp[j] = {rot[j].scaled(half), cj.scaled(half)};
        s3.comp[j] = {rot[j].scaled(halfi), cj.scaled(-halfi)};
    }
    return {s1, s2, s3};
}

namespace {

double polyval_even(const std::vector<double>& c, double u) {
    // c over powers of u = x^2
    double s = 0.0;
    for (size_t k = c.size(); k-- > 0;) s = s * u + c[k];
    return s;
}

} // namespace

std::array<std::array<double, 3>, 3> fixture(int p, double d, double t) {
    const double sech = 1.0 / std::cosh(t);
    const double tanh = std::tanh(t);
    if (p == 1) {
        const double r = std::sqrt(1.0 + d * d);
        const double cs = std::cos(t / d), sn = std::sin(t / d);
        return {{{tanh, -sech / r, d * sech / r},
                 {cs * sech, (cs * tanh - d * sn) / r, -(d * cs * tanh + sn) / r},
                 {sn * sech, (sn * tanh + d * cs) / r, -(d * sn * tanh - cs) / r}}};
    }
    if (p == 3) {
        const double d2 = d * d, d4 = d2 * d2;
        const double z = sech * sech;
        const double al = 1.0 / (std::sqrt(d2 + 1.0) * (d2 + 9.0));
        // symmetric member, gamma1 = tanh * (1 - 4 d^2 z/(d^2+9))
        const std::array<double, 3> g1 = {
            al * std::sqrt(d2 + 1.0) * (9.0 + d2 - 4.0 * d2 * z) * tanh,
            al * (4.0 * d2 * z - 9.0 * (d2 + 1.0)) * sech,
            al * d * (3.0 * (d2 + 1.0) - 4.0 * d2 * z) * sech};

        // rotating members: numerator tables in u = e^{2t}, phase 3t/d
        const double u = std::exp(2.0 * t);
        const double x = std::exp(t);
        const double cs = std::cos(3.0 * t / d), sn = std::sin(3.0 * t / d);
        const double den23 = (d2 + 1.0) * std::pow(d2 + 9.0, 1.5) * std::pow(1.0 + u, 3);
        const double den1 = den23 / std::sqrt(d2 + 1.0);

        const double Y1 = polyval_even({3.0 * d4 + 30.0 * d2 + 27.0,
                                        -10.0 * d4 + 12.0 * d2 + 54.0,
                                        3.0 * d4 - 66.0 * d2 + 27.0},
                                       u);
        const double Y1b = (3.0 * d2 - 9.0) * u - 5.0 * d2 - 9.0;
        const double A1 = 2.0 * x * Y1;
        const double B1 = -16.0 * d * x * u * Y1b;

        const double A2 = polyval_even({-3.0 * d4 - 30.0 * d2 - 27.0,
                                        21.0 * d4 - 6.0 * d2 - 27.0,
                                        3.0 * d4 + 30.0 * d2 + 27.0,
                                        11.0 * d4 - 90.0 * d2 + 27.0},
                                       u);
        const double B2 = d * polyval_even({d4 + 10.0 * d2 + 9.0,
                                            3.0 * d4 - 42.0 * d2 - 45.0,
                                            3.0 * d4 + 30.0 * d2 + 27.0,
                                            d4 - 46.0 * d2 + 81.0},
                                           u);
        const double A3 = -d * polyval_even({-d4 - 10.0 * d2 - 9.0,
                                             15.0 * d4 + 78.0 * d2 + 63.0,
                                             -15.0 * d4 + 138.0 * d2 + 153.0,
                                             d4 - 46.0 * d2 + 81.0},
                                            u);
        const double B3 = polyval_even({3.0 * d4 + 30.0 * d2 + 27.0,
                                        33.0 * d4 + 114.0 * d2 + 81.0,
                                        -87.0 * d4 - 6.0 * d2 + 81.0,
                                        11.0 * d4 - 90.0 * d2 + 27.0},
                                       u);

        const std::array<double, 3> g2 = {(A1 * cs - B1 * sn) / den1,
                                          (A2 * cs - B2 * sn) / den23,
                                          (A3 * cs - B3 * sn) / den23};
        const std::array<double, 3> g3 = {(A1 * sn + B1 * cs) / den1,
                                          (A2 * sn + B2 * cs) / den23,
                                          (A3 * sn + B3 * cs) / den23};
        return {g1, g2, g3};
    }
    throw UnsupportedP("fixture: closed forms available for p in {1, 3}");
}

std::array<std::array<double, 3>, 3> gram_matrix(const std::array<GammaSolution, 3>& sols,
                                                 double t) {
    std::array<std::array<double, 3>, 3> G{};
    std::array<std::array<double, 3>, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = sols[i].eval_real(t);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            G[i][j] = v[i][0] * v[j][0] + v[i][1] * v[j][1] + v[i][2] * v[j][2];
    return G;
}

} // namespace suslov::meromorphic
