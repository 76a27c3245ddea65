#include "mfsens/zerod.hpp"

#include <array>
#include <cmath>

#include "mfsens/errors.hpp"

namespace mfsens {
namespace {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

Vec3 matvec(const Mat3& m, const Vec3& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

Mat3 inverse(const Mat3& m) {
    const double a = m[0][0], b = m[0][1], c = m[0][2];
    const double d = m[1][0], e = m[1][1], f = m[1][2];
    const double g = m[2][0], h = m[2][1], i = m[2][2];
    const double A = e * i - f * h, B = c * h - b * i, C = b * f - c * e;
    const double D = f * g - d * i, E = a * i - c * g, F = c * d - a * f;
    const double G = d * h - e * g, H = b * g - a * h, I = a * e - b * d;
    const double det = a * A + b * D + c * G;
    if (det == 0.0 || !std::isfinite(det)) {
        throw DomainError("simulate_0d: singular integration matrix");
    }
    const double s = 1.0 / det;
    return {{{A * s, B * s, C * s}, {D * s, E * s, F * s}, {G * s, H * s, I * s}}};
}

double norm(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

StationTrace simulate_0d(const VesselInput& z, const HemoConfig& cfg,
                         const InflowWaveform& waveform) {
    cfg.validate();
    const RcParameters rc = rc_parameters(z.r, z.E, z.h, cfg, cfg.L);
    const double Ru = rc.R / 2.0;  // per-unit resistance
    const double Cu = rc.C / 2.0;  // per-unit compliance

    // States y = (P1, P2, Pc): node between the units, node at the outlet
    // face, Windkessel capacitor. y' = M y + b(t).
    Mat3 M{};
    const double k12 = 1.0 / (Cu * Ru);
    M[0][0] = -k12;
    M[0][1] = k12;
    M[1][0] = k12;
    M[1][1] = -k12 - 1.0 / (Cu * cfg.Rp);
    M[1][2] = 1.0 / (Cu * cfg.Rp);
    M[2][1] = 1.0 / (cfg.Cwk * cfg.Rp);
    M[2][2] = -1.0 / (cfg.Cwk * cfg.Rp) - 1.0 / (cfg.Cwk * cfg.Rd);

    const double dt = cfg.dt_0d;
    const double T = waveform.period();

    auto rhs = [&](const Vec3& y, double t) -> Vec3 {
        Vec3 f = matvec(M, y);
        f[0] += waveform.flow(t) / Cu;
        f[2] += cfg.P_ref / (cfg.Cwk * cfg.Rd);
        return f;
    };

    // Generalized-alpha for first-order systems, spectral radius 0.5.
    constexpr double rho_inf = 0.5;
    const double alpha_m = 0.5 * (3.0 - rho_inf) / (1.0 + rho_inf);
    const double alpha_f = 1.0 / (1.0 + rho_inf);
    const double gamma = 0.5 + alpha_m - alpha_f;

    // Newton iteration matrix d(residual)/d(ydot_{n+1}) is constant for this
    // linear system; factor it once.
    Mat3 J{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            J[i][j] = (i == j ? alpha_m : 0.0) - alpha_f * gamma * dt * M[i][j];
        }
    }
    const Mat3 Jinv = inverse(J);

    Vec3 y = {cfg.P_dia, cfg.P_dia, cfg.P_dia};
    Vec3 ydot = rhs(y, 0.0);

    const double t_total = cfg.cycles_0d * T;
    const std::size_t n_steps = static_cast<std::size_t>(std::llround(t_total / dt));
    const double t_record = (cfg.cycles_0d - 1) * T;
    constexpr double kNewtonTol = 1e-10;
    constexpr int kMaxNewton = 25;

    StationTrace trace;
    const std::size_t reserve = static_cast<std::size_t>(T / dt) + 2;
    trace.t.reserve(reserve);
    trace.P.reserve(reserve);
    trace.Q.reserve(reserve);
    trace.r.reserve(reserve);

    const double dr_gain = 3.0 * z.r * z.r / (4.0 * z.E * z.h);
    auto record = [&](double t, const Vec3& state) {
        if (t < t_record - 0.5 * dt || t >= t_total - 0.5 * dt) return;
        trace.t.push_back(t - t_record);
        trace.P.push_back(state[0]);
        trace.Q.push_back((state[0] - state[1]) / Ru);
        trace.r.push_back(z.r + dr_gain * (state[0] - cfg.P_dia));
    };

    record(0.0, y);
    for (std::size_t step = 0; step < n_steps; ++step) {
        const double t_n = step * dt;
        const double t_af = t_n + alpha_f * dt;

        Vec3 ydot_new = ydot;  // same-rate predictor
        bool converged = false;
        double r0 = -1.0;
        for (int it = 0; it < kMaxNewton; ++it) {
            Vec3 y_new, y_af;
            for (int i = 0; i < 3; ++i) {
                y_new[i] = y[i] + dt * ((1.0 - gamma) * ydot[i] + gamma * ydot_new[i]);
                y_af[i] = y[i] + alpha_f * (y_new[i] - y[i]);
            }
            const Vec3 f = rhs(y_af, t_af);
            Vec3 res;
            for (int i = 0; i < 3; ++i) {
                res[i] = alpha_m * ydot_new[i] + (1.0 - alpha_m) * ydot[i] - f[i];
            }
            const double rn = norm(res);
            if (!std::isfinite(rn)) throw SolverFailure("simulate_0d: non-finite residual", step);
            if (r0 < 0.0) r0 = rn;
            if (rn <= kNewtonTol * std::max(1.0, r0)) {
                converged = true;
                break;
            }
            const Vec3 delta = matvec(Jinv, res);
            for (int i = 0; i < 3; ++i) ydot_new[i] -= delta[i];
        }
        if (!converged) throw SolverFailure("simulate_0d: Newton stalled", step);

        for (int i = 0; i < 3; ++i) {
            y[i] += dt * ((1.0 - gamma) * ydot[i] + gamma * ydot_new[i]);
            ydot[i] = ydot_new[i];
            if (!std::isfinite(y[i])) throw SolverFailure("simulate_0d: non-finite state", step);
        }
        record(t_n + dt, y);
    }
    return trace;
}

}  // namespace mfsens
