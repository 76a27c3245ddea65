#pragma once

#include "mfsens/hemo.hpp"
#include "mfsens/trace.hpp"
#include "mfsens/waveform.hpp"

namespace mfsens {

// One-dimensional pulse-wave model: conservation of mass and momentum in
// (A, u) form closed by the tube law, solved with the explicit two-step
// MacCormack scheme (second order in space and time). Inlet: prescribed flow
// with area recovered along the outgoing characteristic. Outlet:
// three-element Windkessel coupled through the tube law and characteristic
// extrapolation. The trace is taken at the middle node over the final cycle.
StationTrace simulate_1d(const VesselInput& z, const HemoConfig& cfg,
                         const InflowWaveform& waveform);

}  // namespace mfsens
