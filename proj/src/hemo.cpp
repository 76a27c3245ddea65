#include "mfsens/hemo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mfsens/errors.hpp"

namespace mfsens {

void HemoConfig::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) throw DomainError(std::string("HemoConfig: ") + name + " must be positive");
    };
    positive(L, "L");
    positive(rho_f, "rho_f");
    positive(eta, "eta");
    positive(Rp, "Rp");
    positive(Cwk, "Cwk");
    positive(Rd, "Rd");
    positive(dt_1d, "dt_1d");
    positive(dt_0d, "dt_0d");
    if (nu < 0.0 || nu >= 1.0) throw DomainError("HemoConfig: nu must lie in [0, 1)");
    if (nodes_1d < 3) throw DomainError("HemoConfig: nodes_1d must be >= 3");
    if (cycles_1d < 1 || cycles_0d < 1) throw DomainError("HemoConfig: cycle counts must be >= 1");
}

double wk3_outlet_step(double P, double Q, double dQdt, const HemoConfig& cfg) {
    return Q * (1.0 / cfg.Cwk + cfg.Rp / (cfg.Cwk * cfg.Rd)) + cfg.Rp * dQdt -
           (P - cfg.P_ref) / (cfg.Rd * cfg.Cwk);
}

RcParameters rc_parameters(double r, double E, double h, const HemoConfig& cfg,
                           double segment_length) {
    if (!(r > 0.0 && E > 0.0 && h > 0.0 && segment_length > 0.0)) {
        throw DomainError("rc_parameters: r, E, h, segment_length must be positive");
    }
    const double r2 = r * r;
    const double r4 = r2 * r2;
    RcParameters out;
    out.R = 8.0 * cfg.eta * segment_length / (std::numbers::pi * r4);
    out.C = 3.0 * segment_length * std::numbers::pi * r2 * r / (2.0 * E * h);
    return out;
}

double tube_law_beta(double E, double h, double nu) {
    return std::sqrt(std::numbers::pi) * E * h / (1.0 - nu * nu);
}

double tube_law(double A, double A_dia, double P_dia, double E, double h, double nu) {
    const double beta = tube_law_beta(E, h, nu);
    return P_dia + beta / A_dia * (std::sqrt(A) - std::sqrt(A_dia));
}

double tube_law_area(double P, double A_dia, double P_dia, double beta) {
    const double root = std::sqrt(A_dia) + (P - P_dia) * A_dia / beta;
    return root * root;
}

}  // namespace mfsens
