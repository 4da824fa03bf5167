#include "suslov/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace suslov {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - bhat
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense-output weights
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

struct DenseSegment {
    double t0, h;
    std::vector<double> r1, r2, r3, r4, r5;

    void eval(double t, std::vector<double>& out) const {
        const double th = (t - t0) / h, th1 = 1.0 - th;
        const size_t n = r1.size();
        out.resize(n);
        for (size_t i = 0; i < n; ++i)
            out[i] = r1[i] + th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
    }
};

} // namespace

Trajectory integrate(const RhsFn& rhs, const std::vector<double>& x0, double t0, double t1,
                     double rel_tol, double abs_tol, const std::vector<double>& sample_times) {
    if (t1 == t0) throw InvalidInput("integrate: t1 == t0");
    if (!(rel_tol > 1e-14 && rel_tol < 1e-2) || !(abs_tol > 1e-16 && abs_tol < 1e-2))
        throw InvalidInput("integrate: tolerance out of range");

    const size_t n = x0.size();
    const double dir = (t1 > t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    const double hmin = 1e-14 * span;

    Trajectory traj;
    traj.stats.rel_tol = rel_tol;
    traj.stats.abs_tol = abs_tol;

    std::vector<double> y = x0, ynew(n), err(n), ytmp(n);
    std::vector<std::vector<double>> k(7, std::vector<double>(n));
    rhs(t0, y, k[0]);

    // samples must be traversed in integration order
    std::vector<double> samples = sample_times;
    std::sort(samples.begin(), samples.end());
    if (dir < 0) std::reverse(samples.begin(), samples.end());
    size_t next_sample = 0;
    auto emit = [&](double ts, const std::vector<double>& xs) {
        traj.times.push_back(ts);
        traj.states.push_back(xs);
    };
    // samples at/before t0
    while (next_sample < samples.size() && dir * (samples[next_sample] - t0) <= 0.0) {
        emit(samples[next_sample], y);
        ++next_sample;
    }

    double t = t0;
    double h = dir * std::min(span / 10.0, std::pow(rel_tol, 0.2));
    double err_prev = 1.0;
    const double safety = 0.9, fac_min = 0.2, fac_max = 5.0;
    // PI controller exponents for a 5th-order scheme
    const double k_i = 0.7 / 5.0, k_p = 0.4 / 5.0;

    while (dir * (t1 - t) > 0.0) {
        if (dir * (t + h - t1) > 0.0) h = t1 - t;
        if (std::abs(h) < hmin)
            throw StepSizeUnderflow("integrate: step size underflow at t = " + std::to_string(t));

        for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k[0][i];
        rhs(t + c2 * h, ytmp, k[1]);
        for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k[0][i] + a32 * k[1][i]);
        rhs(t + c3 * h, ytmp, k[2]);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k[0][i] + a42 * k[1][i] + a43 * k[2][i]);
        rhs(t + c4 * h, ytmp, k[3]);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k[0][i] + a52 * k[1][i] + a53 * k[2][i] + a54 * k[3][i]);
        rhs(t + c5 * h, ytmp, k[4]);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k[0][i] + a62 * k[1][i] + a63 * k[2][i] + a64 * k[3][i] +
                                  a65 * k[4][i]);
        rhs(t + h, ytmp, k[5]);
        for (size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k[0][i] + b3 * k[2][i] + b4 * k[3][i] + b5 * k[4][i] +
                                  b6 * k[5][i]);
        rhs(t + h, ynew, k[6]);

        double err_norm = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double e = h * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] +
                                  e6 * k[5][i] + e7 * k[6][i]);
            const double sc = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err_norm += (e / sc) * (e / sc);
        }
        err_norm = std::sqrt(err_norm / static_cast<double>(n));

        if (err_norm <= 1.0) {
            // accept; fill the continuous extension and emit due samples
            DenseSegment seg;
            seg.t0 = t;
            seg.h = h;
            seg.r1 = y;
            seg.r2.resize(n);
            seg.r3.resize(n);
            seg.r4.resize(n);
            seg.r5.resize(n);
            for (size_t i = 0; i < n; ++i) {
                const double ydiff = ynew[i] - y[i];
                const double bspl = h * k[0][i] - ydiff;
                seg.r2[i] = ydiff;
                seg.r3[i] = bspl;
                seg.r4[i] = ydiff - h * k[6][i] - bspl;
                seg.r5[i] = h * (d1 * k[0][i] + d3 * k[2][i] + d4 * k[3][i] + d5 * k[4][i] +
                                 d6 * k[5][i] + d7 * k[6][i]);
            }
            const double tnew = t + h;
            while (next_sample < samples.size() && dir * (samples[next_sample] - tnew) <= 0.0) {
                seg.eval(samples[next_sample], ytmp);
                emit(samples[next_sample], ytmp);
                ++next_sample;
            }
            t = tnew;
            y = ynew;
            k[0] = k[6]; // FSAL
            ++traj.stats.steps_accepted;

            const double en = std::max(err_norm, 1e-10);
            double fac = safety * std::pow(en, -k_i) * std::pow(err_prev, k_p);
            fac = std::clamp(fac, fac_min, fac_max);
            h *= fac;
            err_prev = en;
        } else {
            ++traj.stats.steps_rejected;
            const double fac = std::max(fac_min, safety * std::pow(err_norm, -0.2));
            h *= fac;
        }
    }
    // anything requested beyond t1 is clamped to the final state
    while (next_sample < samples.size()) {
        emit(samples[next_sample], y);
        ++next_sample;
    }
    return traj;
}

Trajectory integrate(const RhsFn& rhs, const std::vector<double>& x0, double t0, double t1,
                     double rel_tol, double abs_tol, int n_samples) {
    std::vector<double> ts;
    if (n_samples < 2) n_samples = 2;
    for (int i = 0; i < n_samples; ++i)
        ts.push_back(t0 + (t1 - t0) * static_cast<double>(i) / (n_samples - 1));
    return integrate(rhs, x0, t0, t1, rel_tol, abs_tol, ts);
}

void euler_poisson_deriv(const InertiaTensor& I, const BodyState& x, BodyState& dx) {
    const double m = I.I13 * x.w1 + I.I23 * x.w2;
    dx.w1 = I.I22 * m * x.w2;
    dx.w2 = -I.I11 * m * x.w1;
    dx.g1 = -x.w2 * x.g3;
    dx.g2 = x.w1 * x.g3;
    dx.g3 = x.w2 * x.g1 - x.w1 * x.g2;
}

RhsFn euler_poisson_rhs(const InertiaTensor& I) {
    return [I](double, const std::vector<double>& x, std::vector<double>& dx) {
        dx.resize(5);
        BodyState s{x[0], x[1], x[2], x[3], x[4]}, ds;
        euler_poisson_deriv(I, s, ds);
        dx[0] = ds.w1;
        dx[1] = ds.w2;
        dx[2] = ds.g1;
        dx[3] = ds.g2;
        dx[4] = ds.g3;
    };
}

RhsFn euler_poisson_rhs_special(double p, double d) {
    if (p == 0.0 || !(d > 0.0)) throw InvalidInput("euler_poisson_rhs_special: need p != 0, d > 0");
    return [p, d](double, const std::vector<double>& x, std::vector<double>& dx) {
        dx.resize(5);
        const double w1 = x[0], w2 = x[1];
        dx[0] = d / (p * (d * d + 1.0)) * w2 * w2;
        dx[1] = -d / p * w1 * w2;
        dx[2] = -w2 * x[4];
        dx[3] = w1 * x[4];
        dx[4] = w2 * x[2] - w1 * x[3];
    };
}

RhsFn poisson_rhs_timedep(const SuslovParams& P, double time_scale) {
    return [P, time_scale](double t, const std::vector<double>& g, std::vector<double>& dg) {
        dg.resize(3);
        Omega w = omega_general(time_scale * t, P);
        w.w1 *= time_scale;
        w.w2 *= time_scale;
        dg[0] = -w.w2 * g[2];
        dg[1] = w.w1 * g[2];
        dg[2] = w.w2 * g[0] - w.w1 * g[1];
    };
}

std::array<double, 3> poisson_gamma_dot(const Omega& w, const std::array<double, 3>& g) {
    return {-w.w2 * g[2], w.w1 * g[2], w.w2 * g[0] - w.w1 * g[1]};
}

std::vector<DriftReport> conservation_report(
    const Trajectory& traj, const std::vector<std::pair<std::string, IntegralFn>>& integrals) {
    if (traj.times.empty()) throw InvalidInput("conservation_report: empty trajectory");
    std::vector<DriftReport> out;
    for (const auto& [name, fn] : integrals) {
        DriftReport r;
        r.name = name;
        r.reference = fn(traj.times.front(), traj.states.front());
        for (size_t i = 0; i < traj.times.size(); ++i)
            r.max_drift = std::max(r.max_drift, std::abs(fn(traj.times[i], traj.states[i]) - r.reference));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace suslov
