#pragma once

#include <functional>
#include <string>
#include <vector>

#include "suslov/closed_form.hpp"
#include "suslov/model.hpp"

namespace suslov {

/// dx/dt = f(t, x); x and dx have the same (arbitrary) dimension.
using RhsFn = std::function<void(double t, const std::vector<double>& x, std::vector<double>& dx)>;

struct IntegratorStats {
    long steps_accepted = 0;
    long steps_rejected = 0;
    double rel_tol = 0.0;
    double abs_tol = 0.0;
};

struct Trajectory {
    std::vector<double> times;               // strictly monotone in integration direction
    std::vector<std::vector<double>> states; // one state per time
    IntegratorStats stats;
};

/// Adaptive embedded Runge-Kutta pair of orders 5(4) with PI step-size
/// control; samples are produced by the scheme's quartic continuous
/// extension, so their accuracy tracks the integration tolerance.
/// Throws StepSizeUnderflow when the required step drops below
/// 1e-14 * |t1 - t0|. Backward integration (t1 < t0) is supported.
Trajectory integrate(const RhsFn& rhs, const std::vector<double>& x0, double t0, double t1,
                     double rel_tol, double abs_tol, const std::vector<double>& sample_times);

/// Convenience: n_samples equally spaced points including both endpoints.
Trajectory integrate(const RhsFn& rhs, const std::vector<double>& x0, double t0, double t1,
                     double rel_tol, double abs_tol, int n_samples);

/// Full Euler-Poisson field for a general tensor; state (w1,w2,g1,g2,g3).
RhsFn euler_poisson_rhs(const InertiaTensor& I);

/// Same field in the special-case parameterization (rewritten system with
/// the + sign in the w1 equation); state (w1,w2,g1,g2,g3).
RhsFn euler_poisson_rhs_special(double p, double d);

void euler_poisson_deriv(const InertiaTensor& I, const BodyState& x, BodyState& dx);

/// Kinematic equations with prescribed closed-form omega(t); state (g1,g2,g3).
/// time_scale A multiplies both the rate and the argument (energy rescaling).
RhsFn poisson_rhs_timedep(const SuslovParams& P, double time_scale = 1.0);

/// gdot = (-w2 g3, w1 g3, w2 g1 - w1 g2) at a single point.
std::array<double, 3> poisson_gamma_dot(const Omega& w, const std::array<double, 3>& g);

struct DriftReport {
    std::string name;
    double max_drift = 0.0;
    double reference = 0.0; // value at the first sample
};

using IntegralFn = std::function<double(double t, const std::vector<double>& x)>;

/// Max |F(x(t)) - F(x(t0))| over the samples, one entry per integral.
std::vector<DriftReport> conservation_report(
    const Trajectory& traj, const std::vector<std::pair<std::string, IntegralFn>>& integrals);

} // namespace suslov
