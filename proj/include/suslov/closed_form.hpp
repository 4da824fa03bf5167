#pragma once

#include "suslov/model.hpp"

namespace suslov {

/// Heteroclinic angular-velocity solution. Evaluated through tanh/sech so it
/// stays finite for |t| up to ~700.
struct Omega {
    double w1 = 0.0, w2 = 0.0;
};

/// omega1 = a tanh t + (c1/2) sech t, omega2 = b tanh t + (c2/2) sech t.
Omega omega_general(double t, const SuslovParams& P);

/// Time derivative of omega_general (analytic).
Omega omega_general_dot(double t, const SuslovParams& P);

/// Special case I13 = 0: omega1 = a tanh t, omega2 = -a c sech t. Requires c > 1.
Omega omega_special(double t, double a, double c);

enum class EnergyForm {
    OriginalF1, // I11 w1^2 + I22 w2^2 on the closed form = 1/(I13^2 I22 + I23^2 I11)
    RescaledF1, // (d^2+1) w1^2 + w2^2 on the special form = a^2 c^2
};

/// The fixed energy level of the normalized closed forms.
double energy_level(const SuslovParams& P, EnergyForm form);

/// F1 evaluated at an arbitrary state (not only on the closed form).
double energy_original(const InertiaTensor& I, const Omega& w);
double energy_rescaled(double d, const Omega& w);

} // namespace suslov
