#include "suslov/closed_form.hpp"

#include <cmath>

namespace suslov {

namespace {
double sech(double t) { return 1.0 / std::cosh(t); }
} // namespace

Omega omega_general(double t, const SuslovParams& P) {
    const double th = std::tanh(t), sc = sech(t);
    return Omega{P.a * th + 0.5 * P.c1 * sc, P.b * th + 0.5 * P.c2 * sc};
}

Omega omega_general_dot(double t, const SuslovParams& P) {
    const double sc = sech(t), th = std::tanh(t);
    const double dth = sc * sc, dsc = -sc * th;
    return Omega{P.a * dth + 0.5 * P.c1 * dsc, P.b * dth + 0.5 * P.c2 * dsc};
}

Omega omega_special(double t, double a, double c) {
    if (!(c > 1.0)) throw InvalidInput("omega_special: requires c > 1");
    return Omega{a * std::tanh(t), -a * c * sech(t)};
}

double energy_level(const SuslovParams& P, EnergyForm form) {
    switch (form) {
        case EnergyForm::OriginalF1:
            if (P.energy_denom <= 0.0)
                throw InvalidInput("energy_level: params carry no inertia data");
            return 1.0 / P.energy_denom;
        case EnergyForm::RescaledF1: {
            if (!P.special) throw InvalidInput("energy_level: rescaled form needs I13 = 0");
            const double ac = P.a * P.c;
            return ac * ac;
        }
    }
    return 0.0;
}

double energy_original(const InertiaTensor& I, const Omega& w) {
    return I.I11 * w.w1 * w.w1 + I.I22 * w.w2 * w.w2;
}

double energy_rescaled(double d, const Omega& w) {
    return (d * d + 1.0) * w.w1 * w.w1 + w.w2 * w.w2;
}

} // namespace suslov
