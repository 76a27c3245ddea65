#pragma once

#include <vector>

namespace mfsens {

// Moments and cross-model correlations estimated from a shared pilot sample.
// Model 0 is the highest fidelity. delta is the central fourth moment, tau
// the standard deviation of g = (f - E f)^2, rho the Pearson correlation of
// f with the high-fidelity model, q the Pearson correlation of g.
struct PilotStatistics {
    std::size_t n_pilot = 0;
    std::vector<double> mu;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<double> tau;
    std::vector<double> rho;  // rho[0] == 1
    std::vector<double> q;    // q[0] == 1

    std::size_t n_models() const { return mu.size(); }
};

// evals[k][s]: model k evaluated at shared pilot point s.
PilotStatistics pilot_statistics(const std::vector<std::vector<double>>& evals);

}  // namespace mfsens
