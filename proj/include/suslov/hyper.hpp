#pragma once

#include <complex>
#include <vector>

#include "suslov/errors.hpp"

namespace suslov::hyper {

using cplx = std::complex<double>;

/// Parameter set of a generalized hypergeometric series pFq with p = q+1.
struct HGSpec {
    std::vector<cplx> alpha; // numerator parameters
    std::vector<cplx> beta;  // denominator parameters
};

struct SeriesValue {
    cplx value{0.0, 0.0};
    double error = 0.0; // magnitude of the first neglected term
    long terms = 0;
};

/// True if c is a nonpositive integer within 1e-12.
bool is_nonpositive_integer(cplx c);

/// Thomae series sum_k prod(alpha_i)_k / prod(beta_j)_k z^k / k!.
/// Terminates exactly when some alpha is a nonpositive integer; otherwise
/// requires |z| < 1. Stops after three consecutive terms below tol*|sum|
/// (cap 10^6 terms). Throws PoleInDenominator if a denominator Pochhammer
/// vanishes while the series is still alive, NoConvergence for |z| >= 1.
SeriesValue pfq(const HGSpec& spec, cplx z, double tol = 1e-15);

/// Term-wise derivative: d/dz pFq(a;b;z) = (prod a / prod b) pFq(a+1;b+1;z).
SeriesValue pfq_derivative(const HGSpec& spec, cplx z, double tol = 1e-15);

/// Gauss 2F1 shorthand.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, double tol = 1e-15);
cplx hyp2f1_derivative(cplx a, cplx b, cplx c, cplx z, double tol = 1e-15);

/// Parameter families of the third-order reduction of the Poisson equations.
/// alpha = (1/2, (1+p)/2, (1-p)/2), beta = ((d -+ ip)/(2d)); the split/quadratic
/// transformation families a/b/c(+-) and alpha/beta(+-) are derived from them.
struct SuslovHGParams {
    double p = 0.0, d = 0.0;
    cplx alpha1, alpha2, alpha3;
    cplx beta1, beta2;
    cplx a_plus, a_minus;   // (2-p)/2 +- ip/(2d)
    cplx b_plus, b_minus;   // (1-p)/2
    cplx c_plus, c_minus;   // 1 + a - b = 3/2 +- ip/(2d)
    cplx alpha_plus, alpha_minus; // (2-p)/4 +- ip/(4d)
    cplx beta_plus, beta_minus;   // (2+p)/4 +- ip/(4d)

    HGSpec f1_spec() const; // {alpha1..3; beta1..2}
};

SuslovHGParams suslov_params(double p, double d);

/// F1(z) as a series (any p) -- identical to pfq on f1_spec().
SeriesValue f1_series(double p, double d, cplx z, double tol = 1e-15);

/// Coefficients of the terminating F1 polynomial (odd integer p >= 1);
/// degree (p-1)/2 in z. Throws ParityError otherwise.
std::vector<double> f1_polynomial(int p, double d);

struct TransformPair {
    cplx lhs, rhs;
};

/// Quadratic transformation
///   2F1(a/2, a/2+1/2-b; 1+a-b; 4y/(1+y)^2) = (1+y)^a 2F1(a, b; 1+a-b; -y).
/// Both sides evaluated independently; caller compares.
TransformPair quadratic_transform(cplx a, cplx b, cplx y, double tol = 1e-15);

/// Split identity
///   3F2(2a, 2b, a+b; 2a+2b-1, a+b+1/2; x) = 2F1(a,b;g;x) 2F1(a,b;g-1;x),
/// g = a+b+1/2.
TransformPair split_3f2(cplx alpha, cplx beta, cplx x, double tol = 1e-15);

/// Contiguous relation: F(a,b;g-1;z) = F(a,b;g;z) + z F'(a,b;g;z)/(g-1).
/// Returns the value computed through F and F' at gamma.
cplx contiguous_lower_gamma(cplx a, cplx b, cplx g, cplx z, double tol = 1e-15);

/// The transformed solutions F_{2,3} as functions of y = e^{2t}:
///   kappa/( (1+y)^{p-1}(y-1) ) * y^{(d +- ip)/(2d)} * F(a,b;c;-y) * Fhat(...),
///   Fhat = [d(p-1)y - d -+ ip] F - 2dy(y+1) dF/dy,
///   kappa = 2d/((d +- ip)(3d +- ip)); principal branch for the complex power.
/// branch = +1 or -1. Throws BranchPoint at y in {0, +-1}.
cplx f23(double p, double d, cplx y, int branch, double tol = 1e-14);

/// Coefficients (in y) of P(+-) = F * Fhat for odd p: degree p-1.
/// The two branches are complex conjugates of each other.
std::vector<cplx> f23_polynomials(int p, double d, int branch);

/// Boundary solution gamma1(t) = tanh(t) * F1(sech^2 t): equals the solution
/// with gamma(-inf) = (-1,0,0) for t <= 0 (all p) and for all t when p is an
/// odd integer (F1 is then a polynomial and single-valued).
double gamma1_boundary(double t, double p, double d, double tol = 1e-14);

struct MonodromySigmas {
    cplx sigma1, sigma2, sigma3;
    cplx prefactor; // -2i exp(i pi (beta1+beta2-alpha1-alpha2-alpha3))
};

/// Loop-around-z=1 monodromy data of the F1 solution basis.
/// Throws ResonantParameters when a denominator sine vanishes.
MonodromySigmas monodromy_sigmas(const SuslovHGParams& P);

} // namespace suslov::hyper
