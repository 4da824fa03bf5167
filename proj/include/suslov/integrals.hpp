#pragma once

#include <string>
#include <vector>

#include "suslov/exact.hpp"
#include "suslov/model.hpp"

namespace suslov::integrals {

/// Homogeneous polynomial in (w1, w2) with coefficients that are exact
/// rational functions of D = d^2; odd_in_d marks an extra overall factor d.
struct HomogeneousPoly2 {
    int degree = 0;
    std::vector<exact::RatFunc> coef; // coef[i] multiplies w1^i w2^(degree-i)
    bool odd_in_d = false;

    double eval(double d, double w1, double w2) const;
    bool is_zero() const;
    bool even_in_w1() const;
    bool even_in_w2() const;
};

/// F1^((p-1)/2) * F1poly-series in z = w2^2/F1 expanded into a polynomial of
/// degree p-1, even in both variables. Odd p only.
HomogeneousPoly2 q_polynomial(int p);

struct ExtraIntegral {
    int p = 1;
    HomogeneousPoly2 P1, P2, P3; // common degree p; P3 carries the d factor
};

/// P1 = w1 Q; P3 and P2 from the quadrature-free completion relations.
/// The division by w1 is an exact monomial shift (DivisionObstruction if a
/// remainder appears, which would signal a broken construction).
ExtraIntegral build_extra_integral(int p);

/// The three residual polynomials of the defining PDE system; exact.
struct PdeResiduals {
    HomogeneousPoly2 r1, r2, r3;
    bool all_zero() const;
};
PdeResiduals verify_pde_system(const ExtraIntegral& E);

/// F3 = P1 g1 + P2 g2 + P3 g3 at a state.
double f3_evaluate(const ExtraIntegral& E, double d, const BodyState& x);

struct OdeCheckResult {
    bool residual_zero = false;     // exact zero of the third-order equation
    double ratio = 0.0;             // v(z)/F1-series, should be constant
    double proportionality_spread = 0.0;
};

/// Dehomogenized p1(w) = P1(1, w) must satisfy the third-order equation in w
/// exactly, and transform into a constant multiple of the terminating
/// hypergeometric polynomial under the z-substitution.
OdeCheckResult third_order_ode_check(int p, double d);

/// Exact coefficient table for serialization: entries (i, j, coefficient in D).
struct CoeffEntry {
    int i = 0, j = 0;
    std::string num, den; // polynomial coefficients in D, human-readable
    double value = 0.0;   // specialized at a given d
};
std::vector<CoeffEntry> coefficient_table(const HomogeneousPoly2& P, double d);

} // namespace suslov::integrals
