#pragma once

#include <cstddef>

#include "mfsens/units.hpp"

namespace mfsens {

// Deterministic solver parameters shared by all model fidelities: vessel and
// fluid constants, the three-element Windkessel termination, and the
// discretization of the 1D and 0D solvers.
struct HemoConfig {
    double L = 0.126;           // vessel length [m]
    double rho_f = 1050.0;      // blood density [kg/m^3]
    double eta = 0.001;         // dynamic viscosity [Pa s]
    double nu = 0.49;           // wall Poisson ratio [-]
    double Rp = 2.4875e8;       // proximal Windkessel resistance [Pa s/m^3]
    double Cwk = 1.3546e-10;    // Windkessel compliance [m^3/Pa]
    double Rd = 1.8697e9;       // distal Windkessel resistance [Pa s/m^3]
    double P_dia = mmhg_to_pa(78.6);  // tube-law / radius-map reference pressure [Pa]
    double P_ref = 0.0;         // venous pressure behind the distal resistance [Pa]
    double zeta = 2.0;          // velocity-profile order (2 = parabolic)
    int cycles_1d = 5;
    int cycles_0d = 10;
    double dt_1d = 0.0025;      // [s]
    double dt_0d = 0.001;       // [s]
    int nodes_1d = 5;

    void validate() const;
};

// One uncertain input point: diastolic lumen radius, elastic modulus, wall
// thickness. Column order matches the parameter space (r, E, h).
struct VesselInput {
    double r = 3.289e-3;  // [m]
    double E = 4.4e5;     // [Pa]
    double h = 0.785e-3;  // [m]
};

// dP/dt of the three-element Windkessel at outlet pressure P, outflow Q:
//   dP/dt = Q (1/C + Rp/(C Rd)) + Rp dQ/dt - (P - P_ref)/(Rd C).
double wk3_outlet_step(double P, double Q, double dQdt, const HemoConfig& cfg);

// Poiseuille resistance and linear-elastic compliance of a cylindrical
// segment: R = 8 eta L / (pi r^4), C = 3 L pi r^3 / (2 E h).
struct RcParameters {
    double R;  // [Pa s/m^3]
    double C;  // [m^3/Pa]
};
RcParameters rc_parameters(double r, double E, double h, const HemoConfig& cfg,
                           double segment_length);

// Tube law: P = P_dia + beta/A_dia (sqrt(A) - sqrt(A_dia)) with
// beta = sqrt(pi) E h / (1 - nu^2).
double tube_law(double A, double A_dia, double P_dia, double E, double h, double nu);
double tube_law_beta(double E, double h, double nu);

// Inverse of the tube law (area at pressure P); needed by the 1D boundaries.
double tube_law_area(double P, double A_dia, double P_dia, double beta);

}  // namespace mfsens
