#pragma once

#include <vector>

namespace mfsens {

// Time history of pressure, flow, and lumen radius at the observation
// station (1D mid-span / 0D half-length) over exactly the final simulated
// cycle. Times are local to the cycle, t in [0, T).
struct StationTrace {
    std::vector<double> t;  // [s]
    std::vector<double> P;  // [Pa]
    std::vector<double> Q;  // [m^3/s]
    std::vector<double> r;  // [m]
};

// Cycle-level quantities of interest.
struct QoiVector {
    double P_sys = 0.0;   // max pressure [Pa]
    double PP = 0.0;      // pulse pressure, max - min [Pa]
    double dr_max = 0.0;  // max radius change, max r - min r [m]
};

QoiVector extract_qoi(const StationTrace& trace);

}  // namespace mfsens
