#pragma once

#include <array>
#include <complex>
#include <vector>

#include "suslov/errors.hpp"

namespace suslov::meromorphic {

using cplx = std::complex<double>;

/// f(t) = exp(mu t) * sum_k coef[k] x^(low+k) / (1+x^2)^denom_pow, x = e^t.
/// Closed under d/dt and under the algebra used to complete a gamma1 solution
/// to a full Poisson solution. Evaluation is overflow-safe for |Re t| large.
struct PhasedRational {
    cplx mu{0.0, 0.0};
    int low = 0;
    std::vector<cplx> coef; // from x^low upward
    int denom_pow = 0;

    cplx eval(cplx t) const;
    PhasedRational dt() const;         // d/dt
    PhasedRational shift(int k) const; // multiply by x^k
    PhasedRational scaled(cplx s) const;
    PhasedRational conjugated() const; // conj coefficients, conj mu
};

/// A solution of the Poisson equations as three evaluable components, each a
/// short sum of PhasedRationals (one term for the symmetric family, two for
/// the real rotating combinations).
struct GammaSolution {
    std::array<std::vector<PhasedRational>, 3> comp;

    std::array<cplx, 3> eval(cplx t) const;
    std::array<cplx, 3> eval_dt(cplx t) const;
    std::array<double, 3> eval_real(double t) const;
};

/// a_k = 4^k * (k-th coefficient of the terminating F1 polynomial); a_0 = 1.
std::vector<double> ak_coefficients(int p, double d);

/// Coefficients b_0..b_{p-1} of the product polynomial P(y) attached to the
/// rotating solutions (branch with parameters a = (2-p)/2 + ip/(2d)).
std::vector<cplx> bk_coefficients(int p, double d);

enum class Gamma1Kind {
    Symmetric,     // gamma1 = tanh(t) F1(sech^2 t), real
    RotatingPlus,  // phase exp(+ip t/d), coefficients P+
    RotatingMinus, // phase exp(-ip t/d), coefficients conj(P+)
};

struct Gamma1Form {
    Gamma1Kind kind = Gamma1Kind::Symmetric;
    int p = 1;
    double d = 1.0;
    PhasedRational handle;
};

Gamma1Form make_gamma1_form(Gamma1Kind kind, int p, double d);

/// Evaluates gamma1 at real or complex time. Throws PoleHit within 1e-12 of
/// the pole lattice t = i pi/2 (mod i pi).
cplx gamma1_eval(const Gamma1Form& form, cplx t);

/// Completes a gamma1 component to the full (gamma1, gamma2, gamma3) solution:
/// gamma3 = -d(gamma1)/dt / omega2, gamma2 = (omega2 gamma1 - d(gamma3)/dt)/omega1.
/// The division by omega1 (zero at t = 0) is carried out as exact polynomial
/// division by (x^2 - 1); a nonzero remainder (DivisionObstruction) signals a
/// gamma1 that does not solve the reduced equation.
std::array<PhasedRational, 3> complete_gamma(const Gamma1Form& form);

/// The orthonormal triple of real solutions for odd p:
/// index 0: symmetric; 1, 2: normalized real/imaginary rotating combinations.
std::array<GammaSolution, 3> solution_triple(int p, double d);

/// Closed forms of the p = 1 and p = 3 triples (frozen coefficient tables,
/// independent of the construction pipeline). Throws UnsupportedP otherwise.
std::array<std::array<double, 3>, 3> fixture(int p, double d, double t);

/// 3x3 matrix of inner products of three solutions at time t.
std::array<std::array<double, 3>, 3> gram_matrix(const std::array<GammaSolution, 3>& sols,
                                                 double t);

} // namespace suslov::meromorphic
