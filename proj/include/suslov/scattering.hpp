#pragma once

#include <string>

#include "suslov/errors.hpp"

namespace suslov::scattering {

enum class Method { Formula, Numerical };

struct ScatteringResult {
    double delta_psi = 0.0; // radians, in [0, 2 pi)
    Method method = Method::Formula;
    double residual = 0.0;  // tail variation (numerical only)
    double p = 0.0, d = 0.0;
};

/// cos(delta_psi / 2) = cos(pi p / 2) / cosh(pi p / (2 d));
/// returns exactly pi for odd integer p.
ScatteringResult delta_psi_formula(double p, double d);

/// lim_{t->inf} gamma1 of the boundary solution:
/// 1 - 2 cos^2(pi p/2) / cosh^2(pi p/(2d)) = -cos(delta_psi).
double limit_gamma1(double p, double d);

/// Boundary-value route: integrate the kinematic equations from
/// gamma(-T) = (-1, 0, 0), average gamma1 over one tail rotation period to
/// strip the oscillating component, and convert through the half-angle of
/// the measured limit. The unobservable half-angle sign is resolved by
/// sign(cos(pi p/2)) so both methods share one representative in [0, 2 pi).
/// time_scale rescales the energy level (the angle must not change).
/// Throws HorizonTooShort if the gamma1 tail still varies by > 10 * tol.
ScatteringResult delta_psi_numeric(double p, double d, double T = 25.0, double tol = 1e-6,
                                   double time_scale = 1.0);

} // namespace suslov::scattering
