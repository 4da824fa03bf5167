#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "suslov/exact.hpp"
#include "suslov/model.hpp"

namespace suslov::galois {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// sphere chart and Riccati reduction
// ---------------------------------------------------------------------------

struct ChartPair {
    cplx u1, u2;
};

/// u1 = (g3+1)/(g1 - i g2), u2 = -(g1 + i g2)/(g3+1).
ChartPair stereographic(const std::array<double, 3>& g);
ChartPair stereographic(const std::array<cplx, 3>& g);

/// Inverse chart; requires u1 != u2.
std::array<cplx, 3> inverse_stereographic(cplx u1, cplx u2);

/// Riccati coefficients of the reduced flow on the chart:
/// udot = A + C u^2 with A = (w2 - i w1)/2, C = (w2 + i w1)/2 (B = -i w3 = 0).
struct RiccatiCoeffs {
    std::function<cplx(double)> A, C;
    std::function<cplx(double)> C_dot; // analytic derivative of C
};

RiccatiCoeffs riccati_coeffs(const SuslovParams& P);

/// General solution through two known particular solutions:
/// (u - u0)/(u - u1) = C0 exp( int_t0^t C(s) (u0(s) - u1(s)) ds ).
/// Returns u(t); the quadrature runs on the adaptive integrator.
cplx riccati_general_solution(const std::function<cplx(double)>& u0,
                              const std::function<cplx(double)>& u1,
                              const std::function<cplx(double)>& C, double t0, cplx C0, double t,
                              double tol = 1e-12);

/// Coefficients of the scalar second-order form wddot = B1 wdot + A1 w:
/// A1 = -A C, B1 = Cdot/C.
struct SecondOrderCoeffs {
    std::function<cplx(double)> A1, B1;
};
SecondOrderCoeffs second_order_coeffs(const SuslovParams& P);

// ---------------------------------------------------------------------------
// reduced equation y'' = r(z) y in z = e^t
// ---------------------------------------------------------------------------

/// r = P/Q with deg P = 8, deg Q = 10; built either from the printed
/// coefficient table or independently from p(z), q(z) via r = p'/2 + p^2/4 - q.
struct ReducedEquation {
    double p = 0.0, c = 0.0, d = 0.0;
    std::array<cplx, 9> P{};   // ascending
    std::vector<cplx> Q;       // ascending, degree 10

    cplx r_table(cplx z) const;   // P/Q
    cplx r_from_pq(cplx z) const; // p'/2 + p^2/4 - q, independent route
};

/// Throws DegenerateC if c = +-1, InvalidInput if p = 0.
ReducedEquation reduced_equation(double p, double c);

enum class SingPoint { S0_zero, S1_plus_i, S2_minus_i, S3, S4, S5_infinity };

struct SingularPointData {
    SingPoint which;
    cplx location; // meaningless for S5
    std::array<cplx, 2> exponents;
    cplx delta; // exponent difference
    std::optional<bool> logarithmic; // filled by the Frobenius test for resonant points
};

/// Locates the six regular singular points and solves the indicial equations.
std::vector<SingularPointData> singular_exponents(const ReducedEquation& eqn);

// ---------------------------------------------------------------------------
// exact Frobenius logarithm detection
// ---------------------------------------------------------------------------

/// Rational parameter point on c^2 - d^2 = 1 so the singular points and all
/// series coefficients stay Gaussian-rational.
struct RationalCD {
    exact::Rational c, d;
};

/// Default certificate point c = 5/4, d = 3/4.
RationalCD default_rational_cd();

struct FrobeniusResult {
    bool logarithmic = false;
    long resonance_order = 0; // index of the obstructed coefficient
    bool obstruction_zero = true;
};

/// Runs the Frobenius recursion at the smaller exponent of a resonant point
/// in exact Gaussian-rational arithmetic and checks the compatibility
/// condition at the resonance order. nterms must be >= Delta + 5.
/// Throws NonResonant for points whose exponent difference is not a
/// nonnegative integer (S0, S5).
FrobeniusResult frobenius_log_test(int p, const RationalCD& cd, SingPoint where, int nterms);

/// Floating-point variant for non-integer exploration (threshold 1e-20).
FrobeniusResult frobenius_log_test_float(const ReducedEquation& eqn, SingPoint where,
                                         int delta, int nterms);

// ---------------------------------------------------------------------------
// exponential-solution degree bound and the Liouvillian verdict
// ---------------------------------------------------------------------------

struct DegreeBound {
    std::vector<long> candidates; // admissible degrees n = -sum rho_i
    bool all_negative = false;
};

/// Admissible degrees of the polynomial factor of an exponential solution,
/// given that the resonant points s1, s2 carry logarithms (even p):
/// {-p, -p-2, -p-4} for p > 0 and {p, p-2, p-4} for p < 0.
DegreeBound exponential_degree_bound(int p);

enum class LiouvillianVerdict { Solvable_OddP, NotLiouvillian_EvenP, Unknown };

struct VerdictReport {
    LiouvillianVerdict verdict = LiouvillianVerdict::Unknown;
    bool frobenius_ran = false;
    bool logarithmic_at_s1 = false;
    DegreeBound bound;
    std::string note;
};

/// Certificate-based classification. Odd p: explicit solutions exist. Even p
/// with |p| <= 10 (the verified range), or any even p when rerun_beyond is
/// set: run the exact Frobenius certificate; logarithmic at s1 plus an
/// all-negative degree set yields NotLiouvillian_EvenP. Otherwise Unknown.
VerdictReport liouvillian_verdict(int p, bool rerun_beyond = false,
                                  const RationalCD& cd = default_rational_cd());

std::string to_string(LiouvillianVerdict v);

} // namespace suslov::galois
