#include "suslov/hyper.hpp"

#include <algorithm>
#include <cmath>

namespace suslov::hyper {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr long kMaxTerms = 1'000'000;

bool near_zero(cplx c, double tol = 1e-12) { return std::abs(c) < tol; }
} // namespace

bool is_nonpositive_integer(cplx c) {
    if (std::abs(c.imag()) > 1e-12) return false;
    const double r = std::round(c.real());
    return r <= 0.0 && std::abs(c.real() - r) < 1e-12;
}

SeriesValue pfq(const HGSpec& spec, cplx z, double tol) {
    // smallest truncation index among terminating numerator parameters
    long stop_at = -1;
    for (const cplx& a : spec.alpha)
        if (is_nonpositive_integer(a)) {
            const long m = static_cast<long>(-std::round(a.real()));
            stop_at = (stop_at < 0) ? m : std::min(stop_at, m);
        }
    if (stop_at < 0 && std::abs(z) >= 1.0 && !near_zero(z - cplx(0.0)))
        throw NoConvergence("pfq: |z| >= 1 and the series does not terminate");

    SeriesValue out;
    cplx term(1.0, 0.0), sum(1.0, 0.0);
    if (z == cplx(0.0, 0.0) || stop_at == 0) {
        out.value = sum;
        out.terms = 1;
        return out;
    }
    int quiet = 0;
    for (long k = 0; k < kMaxTerms; ++k) {
        if (stop_at >= 0 && k >= stop_at) break;
        cplx ratio = z / static_cast<double>(k + 1);
        for (const cplx& a : spec.alpha) ratio *= (a + static_cast<double>(k));
        for (const cplx& b : spec.beta) {
            const cplx den = b + static_cast<double>(k);
            if (near_zero(den))
                throw PoleInDenominator("pfq: denominator parameter hit a nonpositive integer");
            ratio /= den;
        }
        term *= ratio;
        sum += term;
        out.terms = k + 2;
        if (std::abs(term) < tol * std::abs(sum)) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    out.value = sum;
    out.error = std::abs(term);
    if (stop_at >= 0) out.error = 0.0;
    return out;
}

SeriesValue pfq_derivative(const HGSpec& spec, cplx z, double tol) {
    cplx factor(1.0, 0.0);
    HGSpec up = spec;
    for (cplx& a : up.alpha) {
        factor *= a;
        a += 1.0;
    }
    for (cplx& b : up.beta) {
        factor /= b;
        b += 1.0;
    }
    SeriesValue v = pfq(up, z, tol);
    v.value *= factor;
    v.error *= std::abs(factor);
    return v;
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, double tol) {
    return pfq(HGSpec{{a, b}, {c}}, z, tol).value;
}

cplx hyp2f1_derivative(cplx a, cplx b, cplx c, cplx z, double tol) {
    return pfq_derivative(HGSpec{{a, b}, {c}}, z, tol).value;
}

HGSpec SuslovHGParams::f1_spec() const {
    return HGSpec{{alpha1, alpha2, alpha3}, {beta1, beta2}};
}

SuslovHGParams suslov_params(double p, double d) {
    if (!(d > 0.0)) throw InvalidInput("suslov_params: d must be positive");
    SuslovHGParams P;
    P.p = p;
    P.d = d;
    const cplx ipd(0.0, p / (2.0 * d)); // ip/(2d)
    P.alpha1 = 0.5;
    P.alpha2 = 0.5 * (1.0 + p);
    P.alpha3 = 0.5 * (1.0 - p);
    P.beta1 = cplx(0.5, 0.0) - ipd;
    P.beta2 = cplx(0.5, 0.0) + ipd;
    P.a_plus = cplx(0.5 * (2.0 - p), 0.0) + ipd;
    P.a_minus = std::conj(P.a_plus);
    P.b_plus = P.b_minus = 0.5 * (1.0 - p);
    P.c_plus = cplx(1.5, 0.0) + ipd;
    P.c_minus = std::conj(P.c_plus);
    P.alpha_plus = cplx(0.25 * (2.0 - p), 0.0) + 0.5 * ipd;
    P.alpha_minus = std::conj(P.alpha_plus);
    P.beta_plus = cplx(0.25 * (2.0 + p), 0.0) + 0.5 * ipd;
    P.beta_minus = std::conj(P.beta_plus);
    return P;
}

SeriesValue f1_series(double p, double d, cplx z, double tol) {
    return pfq(suslov_params(p, d).f1_spec(), z, tol);
}

std::vector<double> f1_polynomial(int p, double d) {
    if (p < 1 || p % 2 == 0) throw ParityError("f1_polynomial: p must be odd and positive");
    const int jmax = (p - 1) / 2;
    std::vector<double> c(jmax + 1);
    c[0] = 1.0;
    const double p2 = static_cast<double>(p) * p;
    for (int j = 0; j < jmax; ++j) {
        // ratio of consecutive Pochhammer terms; real by conjugate beta pair
        const double num =
            (0.5 + j) * (0.5 * (1.0 + p) + j) * (0.5 * (1.0 - p) + j);
        const double m = 2.0 * j + 1.0;
        const double den = (m * m * d * d + p2) / (4.0 * d * d) * (j + 1.0);
        c[j + 1] = c[j] * num / den;
    }
    return c;
}

TransformPair quadratic_transform(cplx a, cplx b, cplx y, double tol) {
    const cplx z = 4.0 * y / ((1.0 + y) * (1.0 + y));
    TransformPair r;
    r.lhs = hyp2f1(0.5 * a, 0.5 * a + 0.5 - b, 1.0 + a - b, z, tol);
    r.rhs = std::pow(1.0 + y, a) * hyp2f1(a, b, 1.0 + a - b, -y, tol);
    return r;
}

TransformPair split_3f2(cplx alpha, cplx beta, cplx x, double tol) {
    const cplx g = alpha + beta + 0.5;
    TransformPair r;
    r.lhs = pfq(HGSpec{{2.0 * alpha, 2.0 * beta, alpha + beta},
                       {2.0 * alpha + 2.0 * beta - 1.0, g}},
                x, tol)
                .value;
    r.rhs = hyp2f1(alpha, beta, g, x, tol) * hyp2f1(alpha, beta, g - 1.0, x, tol);
    return r;
}

cplx contiguous_lower_gamma(cplx a, cplx b, cplx g, cplx z, double tol) {
    if (is_nonpositive_integer(g) || near_zero(g - 1.0))
        throw InvalidInput("contiguous_lower_gamma: gamma must not be in {1, 0, -1, ...}");
    const cplx F = hyp2f1(a, b, g, z, tol);
    const cplx Fp = hyp2f1_derivative(a, b, g, z, tol);
    return F + z * Fp / (g - 1.0);
}

namespace {

// Fhat(a,b;c;-y) = [d(p-1)y - d - s*ip] F(-y) - 2dy(y+1) dF/dy(-y), s = branch.
cplx fhat_value(double p, double d, cplx y, int branch, double tol) {
    const auto P = suslov_params(p, d);
    const cplx a = (branch > 0) ? P.a_plus : P.a_minus;
    const cplx b = P.b_plus;
    const cplx c = (branch > 0) ? P.c_plus : P.c_minus;
    const cplx F = hyp2f1(a, b, c, -y, tol);
    // d/dy F(-y) = -F'(-y)
    const cplx dFdy = -hyp2f1_derivative(a, b, c, -y, tol);
    const cplx shift = cplx(-d, -branch * p);
    return (d * (p - 1.0) * y + shift) * F - 2.0 * d * y * (y + 1.0) * dFdy;
}

} // namespace

cplx f23(double p, double d, cplx y, int branch, double tol) {
    if (near_zero(y) || near_zero(y - 1.0) || near_zero(y + 1.0))
        throw BranchPoint("f23: y in {0, +1, -1}");
    const auto P = suslov_params(p, d);
    const cplx a = (branch > 0) ? P.a_plus : P.a_minus;
    const cplx b = P.b_plus;
    const cplx c = (branch > 0) ? P.c_plus : P.c_minus;
    const cplx ip(0.0, branch * p);
    const cplx kappa = 2.0 * d / ((d + ip) * (3.0 * d + ip));
    const cplx expo = (cplx(d, 0.0) + ip) / (2.0 * d);
    const cplx F = hyp2f1(a, b, c, -y, tol);
    const cplx Fh = fhat_value(p, d, y, branch, tol);
    return kappa / (std::pow(1.0 + y, p - 1.0) * (y - 1.0)) * std::pow(y, expo) * F * Fh;
}

std::vector<cplx> f23_polynomials(int p, double d, int branch) {
    if (p < 1 || p % 2 == 0) throw ParityError("f23_polynomials: p must be odd and positive");
    const auto P = suslov_params(p, d);
    const cplx a = P.a_plus, b = P.b_plus, c = P.c_plus;
    const int kmax = (p - 1) / 2;

    // F(a,b;c;-y) coefficients
    std::vector<cplx> f(kmax + 1);
    f[0] = 1.0;
    for (int k = 0; k < kmax; ++k)
        f[k + 1] = -f[k] * (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                   ((c + static_cast<double>(k)) * static_cast<double>(k + 1));

    // Fhat = [d(p-1)y - d - ip] F - 2d(y^2+y) F'; degree stays (p-1)/2,
    // the top coefficient cancels identically.
    std::vector<cplx> fh(kmax + 2, cplx(0.0));
    const cplx shift(-d, -static_cast<double>(p));
    for (int k = 0; k <= kmax; ++k) {
        fh[k + 1] += d * (p - 1.0) * f[k];
        fh[k] += shift * f[k];
    }
    for (int k = 1; k <= kmax; ++k) {
        const cplx df = f[k] * static_cast<double>(k);
        fh[k] += -2.0 * d * df;
        fh[k + 1] += -2.0 * d * df;
    }
    fh.resize(kmax + 1);

    std::vector<cplx> prod(2 * kmax + 1, cplx(0.0));
    for (int i = 0; i <= kmax; ++i)
        for (int j = 0; j <= kmax; ++j) prod[i + j] += f[i] * fh[j];

    if (branch < 0)
        for (cplx& v : prod) v = std::conj(v);
    return prod;
}

double gamma1_boundary(double t, double p, double d, double tol) {
    if (t == 0.0) return 0.0;
    const double sech = 1.0 / std::cosh(t);
    const double z = sech * sech;
    if (z >= 1.0) return 0.0;
    const SeriesValue F = f1_series(p, d, z, tol);
    return std::tanh(t) * F.value.real();
}

MonodromySigmas monodromy_sigmas(const SuslovHGParams& P) {
    const cplx pi(kPi, 0.0);
    auto s = [&](cplx w) { return std::sin(pi * w); };
    const cplx sb1 = s(P.beta1), sb2 = s(P.beta2), sb12 = s(P.beta1 - P.beta2);
    if (near_zero(sb1) || near_zero(sb2) || near_zero(sb12))
        throw ResonantParameters("monodromy_sigmas: integer beta parameters");
    MonodromySigmas m;
    m.sigma1 = s(P.alpha1) * s(P.alpha2) * s(P.alpha3) / (sb1 * sb2);
    m.sigma2 = -s(P.beta1 - P.alpha1) * s(P.beta1 - P.alpha2) * s(P.beta1 - P.alpha3) /
               (sb1 * sb12);
    m.sigma3 = -s(P.beta2 - P.alpha1) * s(P.beta2 - P.alpha2) * s(P.beta2 - P.alpha3) /
               (-sb12 * sb2);
    const cplx i(0.0, 1.0);
    m.prefactor =
        -2.0 * i * std::exp(i * pi * (P.beta1 + P.beta2 - P.alpha1 - P.alpha2 - P.alpha3));
    return m;
}

} // namespace suslov::hyper
