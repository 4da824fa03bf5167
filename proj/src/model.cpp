#include "suslov/model.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace suslov {

double InertiaTensor::det() const {
    // det of [[I11,0,I13],[0,I22,I23],[I13,I23,I33]]
    return I11 * (I22 * I33 - I23 * I23) - I13 * I13 * I22;
}

InertiaTensor make_inertia(double I11, double I22, double I33, double I13, double I23) {
    InertiaTensor I{I11, I22, I33, I13, I23};
    const double det = I.det();
    if (!(I11 > 0.0) || !(I22 > 0.0) || !(det > 0.0))
        throw InvalidShape("inertia tensor is not positive definite; cannot normalize");
    const double s = std::cbrt(det);
    return InertiaTensor{I11 / s, I22 / s, I33 / s, I13 / s, I23 / s};
}

InertiaDiagnostics validate_inertia(const InertiaTensor& I) {
    InertiaDiagnostics d;
    if (!(I.I11 > 0.0)) d.violations.push_back("I11 > 0");
    if (!(I.I22 > 0.0)) d.violations.push_back("I22 > 0");
    if (!(I.I11 * I.I22 > 0.0)) d.violations.push_back("I11*I22 > 0");
    const double det = I.det();
    if (!(det > 0.0)) d.violations.push_back("det > 0");
    d.det_deviation = std::abs(det - 1.0);
    if (d.det_deviation > 1e-12) d.violations.push_back("det = 1 (1e-12)");
    d.pass = d.violations.empty();
    return d;
}

SuslovParams params_from_inertia(const InertiaTensor& I, int sign_branch) {
    if (I.I13 == 0.0 && I.I23 == 0.0)
        throw DegenerateAxis("constraint axis is an eigenvector; every motion is an equilibrium");
    if (I.I13 == 0.0 && I.I11 == I.I22)
        throw DegenerateBalance("I11 = I22 with I13 = 0: d = 0");

    SuslovParams P;
    P.sign_branch = (sign_branch >= 0) ? +1 : -1;
    const double denom = I.I13 * I.I13 * I.I22 + I.I23 * I.I23 * I.I11;
    P.energy_denom = denom;
    P.a = I.I23 / denom;
    P.b = -I.I13 / denom; // b = -a I13/I23, continued smoothly through I23 = 0
    const double s = static_cast<double>(P.sign_branch);
    P.c1 = s * 2.0 * I.I13 / denom * std::sqrt(I.I22 / I.I11);
    P.c2 = s * 2.0 * I.I23 / denom * std::sqrt(I.I11 / I.I22);

    if (I.I13 == 0.0 && I.I11 > I.I22) {
        P.special = true;
        P.c = std::sqrt(I.I11 / I.I22);
        P.d = std::sqrt(P.c * P.c - 1.0);
        const double a_special = (I.I22 * I.I33 - I.I23 * I.I23) / I.I23;
        P.p = P.d * a_special;
    }
    return P;
}

SuslovParams params_from_pd(double p, double d) {
    if (!(d > 0.0)) throw InvalidInput("params_from_pd: d must be positive");
    SuslovParams P;
    P.special = true;
    P.p = p;
    P.d = d;
    P.c = std::sqrt(d * d + 1.0);
    P.a = p / d;
    P.b = 0.0;
    P.c1 = 0.0;
    P.c2 = -2.0 * P.c * P.a;
    P.sign_branch = -1;
    return P;
}

namespace {

// I23^2 of the p-realization at diagonal scale lambda (shape fixed).
double i23sq_at_scale(double p, double I11, double I22, double I33, double lam, int branch) {
    const double a11 = lam * I11, a22 = lam * I22, a33 = lam * I33;
    const double disc = p * p + 4.0 * a33 * (a11 - a22);
    const double root = std::sqrt(disc);
    const double s = (branch >= 0) ? +1.0 : -1.0;
    return a22 / (2.0 * (a11 - a22)) * (p * p + 2.0 * a33 * (a11 - a22) + s * p * root);
}

double det_at_scale(double p, double I11, double I22, double I33, double lam, int branch) {
    const double a11 = lam * I11, a22 = lam * I22, a33 = lam * I33;
    const double i23sq = i23sq_at_scale(p, I11, I22, I33, lam, branch);
    return a11 * (a22 * a33 - i23sq);
}

} // namespace

InertiaTensor inertia_from_p(double p, double I11, double I22, double I33, int branch,
                             double* scale) {
    if (!(p > 0.0)) throw InvalidShape("inertia_from_p: p must be positive");
    if (!(I11 > I22) || !(I22 > 0.0)) throw InvalidShape("inertia_from_p: need I11 > I22 > 0");
    if (!(I33 + I22 > I11)) throw InvalidShape("inertia_from_p: need I33 + I22 > I11");

    if (branch >= 0) {
        // Indefinite tensor (I22 I33 < I23^2); no det = 1 scale exists.
        const double i23sq = i23sq_at_scale(p, I11, I22, I33, 1.0, +1);
        if (scale) *scale = 1.0;
        return InertiaTensor{I11, I22, I33, 0.0, std::sqrt(i23sq)};
    }

    // det(lambda) is strictly increasing from 0 to +inf on the minus branch;
    // bracket then bisect to the det = 1 scale.
    double lo = 1e-8, hi = 1.0;
    while (det_at_scale(p, I11, I22, I33, hi, -1) < 1.0) hi *= 2.0;
    while (det_at_scale(p, I11, I22, I33, lo, -1) > 1.0) lo *= 0.5;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (det_at_scale(p, I11, I22, I33, mid, -1) < 1.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16 * hi) break;
    }
    const double lam = 0.5 * (lo + hi);
    if (scale) *scale = lam;
    const double i23 = std::sqrt(i23sq_at_scale(p, I11, I22, I33, lam, -1));
    return InertiaTensor{lam * I11, lam * I22, lam * I33, 0.0, i23};
}

BodyState apply_swap_symmetry(const BodyState& x) {
    return BodyState{-x.w2, -x.w1, x.g2, x.g1, x.g3};
}

InertiaTensor apply_swap_symmetry(const InertiaTensor& I) {
    return InertiaTensor{I.I22, I.I11, I.I33, I.I23, I.I13};
}

std::string to_string(MeromorphicityCase c) {
    switch (c) {
        case MeromorphicityCase::Case1_I13zero: return "Case1_I13zero";
        case MeromorphicityCase::Case2_I23zero: return "Case2_I23zero";
        case MeromorphicityCase::NonMeromorphic: return "NonMeromorphic";
        case MeromorphicityCase::Degenerate_I11eqI22: return "Degenerate_I11eqI22";
    }
    return "?";
}

MeromorphicityVerdict meromorphicity_class(const InertiaTensor& I) {
    MeromorphicityVerdict v;

    if (I.I11 == I.I22) {
        // Kovalevskaya matrix has a multiple eigenvalue 1 and is not semi-simple.
        v.kind = MeromorphicityCase::Degenerate_I11eqI22;
        return v;
    }
    const bool case1 = (I.I13 == 0.0);
    const bool case2 = (I.I23 == 0.0);
    if (!case1 && !case2) {
        v.kind = MeromorphicityCase::NonMeromorphic;
        return v;
    }

    // Lambda^2 in extended precision; for Case2 the admissible sign is flipped.
    const long double I11 = I.I11, I22 = I.I22, I33 = I.I33, I13 = I.I13, I23 = I.I23;
    long double p2 = (I11 - I22) * (I11 * I23 * I23 - I22 * I13 * I13) /
                     (I11 * I22 * (I11 * I22 * I33 - 1.0L) * (I11 * I22 * I33 - 1.0L));
    if (case2 && !case1) p2 = -p2;

    if (!(p2 > 0.0L)) {
        v.kind = MeromorphicityCase::NonMeromorphic;
        v.p_value = std::numeric_limits<double>::quiet_NaN();
        return v;
    }
    const long double p = std::sqrt(p2);
    v.p_value = static_cast<double>(p);
    const long double nearest = std::round(p);
    v.p_is_integer = (std::abs(p - nearest) < 1e-9L) && nearest != 0.0L;
    if (v.p_is_integer) {
        v.kind = case1 ? MeromorphicityCase::Case1_I13zero : MeromorphicityCase::Case2_I23zero;
        const long long n = static_cast<long long>(nearest);
        v.parity = (n % 2 != 0) ? MeromorphicityVerdict::Parity::Odd
                                : MeromorphicityVerdict::Parity::Even;
    } else {
        v.kind = MeromorphicityCase::NonMeromorphic;
    }
    return v;
}

std::array<std::complex<double>, 5> kovalevskaya_spectrum(const InertiaTensor& I,
                                                          bool conjugate_balance) {
    using C = std::complex<double>;
    const double s = std::sqrt(I.I11 * I.I22);
    C i(0.0, conjugate_balance ? -1.0 : 1.0);
    const C w1 = 1.0 / (I.I11 * I.I23 + i * I.I13 * s);
    const C w2 = -1.0 / (I.I13 * I.I22 - i * I.I23 * s);

    Eigen::Matrix<C, 5, 5> K = Eigen::Matrix<C, 5, 5>::Zero();
    // Jacobian of the quadratic field at (w1, w2, 0, 0, 0)
    K(0, 0) = I.I22 * I.I13 * w2;
    K(0, 1) = I.I22 * (I.I13 * w1 + 2.0 * I.I23 * w2);
    K(1, 0) = -I.I11 * (2.0 * I.I13 * w1 + I.I23 * w2);
    K(1, 1) = -I.I11 * I.I23 * w1;
    K(2, 4) = -w2;
    K(3, 4) = w1;
    K(4, 2) = w2;
    K(4, 3) = -w1;
    K += Eigen::Matrix<C, 5, 5>::Identity();

    Eigen::ComplexEigenSolver<Eigen::Matrix<C, 5, 5>> es(K, /*computeEigenvectors=*/false);
    std::array<C, 5> out;
    for (int k = 0; k < 5; ++k) out[k] = es.eigenvalues()(k);
    std::sort(out.begin(), out.end(), [](const C& x, const C& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

std::array<std::array<std::complex<double>, 3>, 3> residue_matrix(const SuslovParams& P) {
    using C = std::complex<double>;
    // Laurent residues of omega at the singular time t0 = i pi/2:
    // omega1 -> (a - i c1/2)/(t - t0), omega2 -> (b - i c2/2)/(t - t0).
    const C r1(P.a, -0.5 * P.c1);
    const C r2(P.b, -0.5 * P.c2);
    return {{{C(0), C(0), -r2}, {C(0), C(0), r1}, {r2, -r1, C(0)}}};
}

std::array<std::complex<double>, 3> residue_eigenvalues(const SuslovParams& P) {
    using C = std::complex<double>;
    const C arg = C(P.c1 * P.c1 + P.c2 * P.c2 - 4.0 * (P.a * P.a + P.b * P.b),
                    4.0 * (P.a * P.c1 + P.b * P.c2));
    const C rho = 0.5 * std::sqrt(arg);
    return {C(0.0), rho, -rho};
}

} // namespace suslov
