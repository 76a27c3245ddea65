#include "mfsens/oned.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mfsens/errors.hpp"

namespace mfsens {
namespace {

// Wave speed of the tube law: c^2 = (A/rho) dP/dA = beta sqrt(A) / (2 rho A_dia).
// The Riemann invariants are W+- = u +- 4c.
struct Wall {
    double beta;
    double A_dia;
    double P_dia;
    double rho;
    double c_coef;  // sqrt(beta / (2 rho A_dia)), c = c_coef * A^(1/4)

    double pressure(double A) const {
        return P_dia + beta / A_dia * (std::sqrt(A) - std::sqrt(A_dia));
    }
    double speed(double A) const { return c_coef * std::pow(A, 0.25); }
    double dPdA(double A) const { return beta / (2.0 * A_dia * std::sqrt(A)); }
};

// Crank-Nicolson update of the Windkessel capacitor pressure given outlet
// pressures at both time levels.
struct Windkessel {
    double Rp, Rd, Cwk, P_ref, dt;

    double denom() const { return Cwk / dt + 0.5 / Rp + 0.5 / Rd; }
    double partial(double Pc, double P_old) const {
        return Pc * (Cwk / dt - 0.5 / Rp - 0.5 / Rd) + 0.5 * P_old / Rp + P_ref / Rd;
    }
    double advance(double Pc, double P_old, double P_new) const {
        return (partial(Pc, P_old) + 0.5 * P_new / Rp) / denom();
    }
};

}  // namespace

StationTrace simulate_1d(const VesselInput& z, const HemoConfig& cfg,
                         const InflowWaveform& waveform) {
    cfg.validate();
    const std::size_t n = static_cast<std::size_t>(cfg.nodes_1d);
    const double dz = cfg.L / static_cast<double>(n - 1);
    const double dt = cfg.dt_1d;
    const double rho = cfg.rho_f;

    Wall wall;
    wall.beta = tube_law_beta(z.E, z.h, cfg.nu);
    wall.A_dia = std::numbers::pi * z.r * z.r;
    wall.P_dia = cfg.P_dia;
    wall.rho = rho;
    wall.c_coef = std::sqrt(wall.beta / (2.0 * rho * wall.A_dia));

    Windkessel wk{cfg.Rp, cfg.Rd, cfg.Cwk, cfg.P_ref, dt};

    const double fric_coef = -2.0 * (cfg.zeta + 2.0) * std::numbers::pi * cfg.eta;

    std::vector<double> A(n, wall.A_dia), u(n, 0.0);
    std::vector<double> Ap(n), up(n), An(n), un(n);  // predictor / new level
    std::vector<double> F1(n), F2(n);
    double Pc = cfg.P_dia;         // Windkessel capacitor pressure
    double P_out = wall.P_dia;     // outlet pressure at current level

    const double T = waveform.period();
    const double t_total = cfg.cycles_1d * T;
    const std::size_t n_steps = static_cast<std::size_t>(std::llround(t_total / dt));
    const double t_record = (cfg.cycles_1d - 1) * T;
    const std::size_t mid = (n - 1) / 2;

    StationTrace trace;
    const std::size_t reserve = static_cast<std::size_t>(T / dt) + 2;
    trace.t.reserve(reserve);
    trace.P.reserve(reserve);
    trace.Q.reserve(reserve);
    trace.r.reserve(reserve);
    auto record = [&](double t) {
        if (t < t_record - 0.5 * dt || t >= t_total - 0.5 * dt) return;
        trace.t.push_back(t - t_record);
        trace.P.push_back(wall.pressure(A[mid]));
        trace.Q.push_back(A[mid] * u[mid]);
        trace.r.push_back(std::sqrt(A[mid] / std::numbers::pi));
    };

    auto fluxes = [&](const std::vector<double>& Av, const std::vector<double>& uv) {
        for (std::size_t i = 0; i < n; ++i) {
            F1[i] = Av[i] * uv[i];
            F2[i] = 0.5 * uv[i] * uv[i] + wall.pressure(Av[i]) / rho;
        }
    };
    auto source_u = [&](double Ai, double ui) { return fric_coef * ui / (rho * Ai); };

    // Inlet closure: prescribed flow, area from the outgoing characteristic
    // W- = u - 4c extrapolated to the boundary foot.
    auto inlet_closure = [&](double Q, double Wm_foot, double A_guess, std::size_t step) {
        double Ain = A_guess;
        for (int it = 0; it < 60; ++it) {
            const double c = wall.speed(Ain);
            const double g = Q / Ain - 4.0 * c - Wm_foot;
            if (std::abs(g) <= 1e-11 * (1.0 + std::abs(Wm_foot))) break;
            const double dg = -Q / (Ain * Ain) - c / Ain;
            double next = Ain - g / dg;
            if (!(next > 0.1 * Ain)) next = 0.1 * Ain;
            if (next > 10.0 * Ain) next = 10.0 * Ain;
            if (!std::isfinite(next)) throw SolverFailure("simulate_1d: inlet closure", step, 0);
            Ain = next;
        }
        return Ain;
    };

    // Outlet closure: W+ = u + 4c from the interior, flow balanced against
    // the Windkessel with the capacitor advanced by Crank-Nicolson.
    auto outlet_closure = [&](double Wp_foot, double A_guess, double Pc_n, double P_old,
                              std::size_t step) {
        double Aout = A_guess;
        const double D = wk.denom();
        const double part = wk.partial(Pc_n, P_old);
        for (int it = 0; it < 60; ++it) {
            const double c = wall.speed(Aout);
            const double P = wall.pressure(Aout);
            const double Pc_new = (part + 0.5 * P / wk.Rp) / D;
            const double g = (Wp_foot - 4.0 * c) * Aout - (P - Pc_new) / wk.Rp;
            if (std::abs(g) <= 1e-11 * (1.0 + std::abs(Wp_foot) * Aout)) break;
            const double dg = (Wp_foot - 4.0 * c) - c - wall.dPdA(Aout) *
                                  (1.0 - 0.5 / (wk.Rp * D)) / wk.Rp;
            double next = Aout - g / dg;
            if (!(next > 0.1 * Aout)) next = 0.1 * Aout;
            if (next > 10.0 * Aout) next = 10.0 * Aout;
            if (!std::isfinite(next)) throw SolverFailure("simulate_1d: outlet closure", step,
                                                          static_cast<long>(n - 1));
            Aout = next;
        }
        return Aout;
    };

    record(0.0);
    for (std::size_t step = 0; step < n_steps; ++step) {
        const double t_new = (step + 1) * dt;

        // CFL on the current state.
        for (std::size_t i = 0; i < n; ++i) {
            const double lam = std::abs(u[i]) + wall.speed(A[i]);
            if (lam * dt / dz > 1.0) {
                throw SolverFailure("simulate_1d: CFL violation", step, static_cast<long>(i));
            }
        }

        // Characteristic feet from the current level (before it is updated).
        const double c0 = wall.speed(A[0]);
        const double s_in = dt * (c0 - u[0]) / dz;
        const double Wm0 = u[0] - 4.0 * c0;
        const double Wm1 = u[1] - 4.0 * wall.speed(A[1]);
        const double Wm_foot = Wm0 + s_in * (Wm1 - Wm0);

        const double cN = wall.speed(A[n - 1]);
        const double s_out = 1.0 - dt * (u[n - 1] + cN) / dz;
        const double WpN = u[n - 1] + 4.0 * cN;
        const double WpM = u[n - 2] + 4.0 * wall.speed(A[n - 2]);
        const double Wp_foot = WpM + s_out * (WpN - WpM);

        // Predictor (forward differences) on nodes 0..n-2.
        fluxes(A, u);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Ap[i] = A[i] - dt / dz * (F1[i + 1] - F1[i]);
            up[i] = u[i] - dt / dz * (F2[i + 1] - F2[i]) + dt * source_u(A[i], u[i]);
        }
        Ap[n - 1] = A[n - 1];
        up[n - 1] = u[n - 1];

        // Corrector (backward differences) on nodes 1..n-2.
        fluxes(Ap, up);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            An[i] = 0.5 * (A[i] + Ap[i]) - 0.5 * dt / dz * (F1[i] - F1[i - 1]);
            un[i] = 0.5 * (u[i] + up[i]) - 0.5 * dt / dz * (F2[i] - F2[i - 1]) +
                    0.5 * dt * source_u(Ap[i], up[i]);
        }

        // Boundary closures at the new level.
        const double Q_in = waveform.flow(t_new);
        An[0] = inlet_closure(Q_in, Wm_foot, A[0], step);
        un[0] = Q_in / An[0];

        An[n - 1] = outlet_closure(Wp_foot, A[n - 1], Pc, P_out, step);
        un[n - 1] = Wp_foot - 4.0 * wall.speed(An[n - 1]);
        const double P_new = wall.pressure(An[n - 1]);
        Pc = wk.advance(Pc, P_out, P_new);
        P_out = P_new;

        for (std::size_t i = 0; i < n; ++i) {
            if (!(An[i] > 0.0) || !std::isfinite(An[i]) || !std::isfinite(un[i])) {
                throw SolverFailure("simulate_1d: invalid state", step, static_cast<long>(i));
            }
        }
        A.swap(An);
        u.swap(un);
        record(t_new);
    }
    return trace;
}

}  // namespace mfsens
