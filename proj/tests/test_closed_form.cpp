#include <doctest.h>

#include <cmath>
#include <random>

#include "suslov/closed_form.hpp"
#include "suslov/integrator.hpp"

using namespace suslov;

TEST_SUITE("closed_form") {

TEST_CASE("limits and midpoint of the general solution") {
    const InertiaTensor I = make_inertia(2.0, 1.0, 1.5, 0.2, 0.3);
    const SuslovParams P = params_from_inertia(I);

    const Omega far = omega_general(700.0, P);
    CHECK(far.w1 == doctest::Approx(P.a).epsilon(1e-12));
    CHECK(far.w2 == doctest::Approx(P.b).epsilon(1e-12));
    CHECK(std::isfinite(omega_general(-700.0, P).w1));
    // limits sit on the equilibria line
    CHECK(I.I13 * far.w1 + I.I23 * far.w2 == doctest::Approx(0.0).epsilon(1e-12));

    const Omega mid = omega_general(0.0, P);
    CHECK(mid.w1 == doctest::Approx(P.c1 / 2.0));
    CHECK(mid.w2 == doctest::Approx(P.c2 / 2.0));
}

TEST_CASE("special case parity and agreement with the general form") {
    const double a = 1.3, c = 1.9;
    const Omega w0 = omega_special(0.0, a, c);
    CHECK(w0.w1 == doctest::Approx(0.0));
    CHECK(w0.w2 == doctest::Approx(-a * c));
    CHECK(omega_special(50.0, a, c).w1 == doctest::Approx(a));
    CHECK(omega_special(-50.0, a, c).w1 == doctest::Approx(-a));

    SuslovParams P;
    P.a = a;
    P.b = 0.0;
    P.c1 = 0.0;
    P.c2 = -2.0 * c * a;
    for (double t : {-3.0, -0.4, 0.0, 1.1, 2.7}) {
        const Omega u = omega_general(t, P), v = omega_special(t, a, c);
        CHECK(u.w1 == doctest::Approx(v.w1).epsilon(1e-14));
        CHECK(u.w2 == doctest::Approx(v.w2).epsilon(1e-14));
        // parity of the special form
        const Omega m = omega_special(-t, a, c);
        CHECK(m.w1 == doctest::Approx(-v.w1).epsilon(1e-14));
        CHECK(m.w2 == doctest::Approx(v.w2).epsilon(1e-14));
    }
    CHECK_THROWS_AS((void)omega_special(0.0, 1.0, 0.9), InvalidInput);
}

TEST_CASE("closed form satisfies the angular-velocity equations pointwise") {
    const InertiaTensor I = make_inertia(2.0, 1.0, 1.5, 0.2, 0.3);
    const SuslovParams P = params_from_inertia(I);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double t = -20.0 + 40.0 * k / 99.0;
        const Omega w = omega_general(t, P);
        const Omega dw = omega_general_dot(t, P);
        const double m = I.I13 * w.w1 + I.I23 * w.w2;
        worst = std::max(worst, std::abs(dw.w1 - I.I22 * m * w.w2));
        worst = std::max(worst, std::abs(dw.w2 + I.I11 * m * w.w1));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("energy level is the predicted constant along the orbit") {
    const InertiaTensor I = make_inertia(2.0, 1.0, 1.5, 0.2, 0.3);
    const SuslovParams P = params_from_inertia(I);
    const double level = energy_level(P, EnergyForm::OriginalF1);
    CHECK(level ==
          doctest::Approx(1.0 / (I.I13 * I.I13 * I.I22 + I.I23 * I.I23 * I.I11)).epsilon(1e-14));
    for (double t : {0.0, 5.0, -3.2, 11.0}) {
        const Omega w = omega_general(t, P);
        CHECK(energy_original(I, w) == doctest::Approx(level).epsilon(1e-12));
    }

    // rescaled form on the special solution, randomized sample times
    const double p = 2.5, d = 0.8;
    const SuslovParams S = params_from_pd(p, d);
    const double lev2 = energy_level(S, EnergyForm::RescaledF1);
    CHECK(lev2 == doctest::Approx(S.a * S.a * S.c * S.c).epsilon(1e-14));
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ts(-15.0, 15.0);
    for (int k = 0; k < 20; ++k) {
        const Omega w = omega_special(ts(rng), S.a, S.c);
        CHECK(energy_rescaled(d, w) == doctest::Approx(lev2).epsilon(1e-12));
    }

    SuslovParams zero = params_from_pd(1e-13, 1.0);
    zero.a = 0.0;
    zero.c2 = 0.0;
    CHECK(energy_level(zero, EnergyForm::RescaledF1) == doctest::Approx(0.0));
}

} // TEST_SUITE
