#pragma once

#include "mfsens/hemo.hpp"
#include "mfsens/trace.hpp"
#include "mfsens/waveform.hpp"

namespace mfsens {

// Lumped-parameter model of the vessel: two identical RC units in series,
// each carrying half of the full-vessel Poiseuille resistance and
// linear-elastic compliance, terminated by the three-element Windkessel.
// Time integration is implicit generalized-alpha (first-order form,
// spectral radius 0.5). The returned trace is taken at the node between the
// two units (half-length); the radius is the linearized map
// dr = 3 r^2 (P - P_dia) / (4 E h).
StationTrace simulate_0d(const VesselInput& z, const HemoConfig& cfg,
                         const InflowWaveform& waveform);

}  // namespace mfsens
