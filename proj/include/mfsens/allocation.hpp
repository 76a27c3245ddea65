#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfsens/pilot.hpp"

namespace mfsens {

// Sample counts and control-variate weights for a budget p. Budgets are in
// equivalent high-fidelity solves; p_eff = p/(d+2) accounts for the Saltelli
// matrices.
struct AllocationPlan {
    std::vector<std::int64_t> m;  // per-fidelity rows, non-decreasing in k
    std::vector<double> alpha;    // alpha[0] == 1
    std::vector<double> r;        // allocation ratios, r[0] == 1
    double p = 0.0;
    double p_eff = 0.0;
    bool admissible = false;
    bool perturbation_applied = false;
};

struct CostRatioCheck {
    bool admissible = false;
    // Offending levels k (1-based, k >= 2): either |rho_{1,k-1}| <= |rho_{1,k}|
    // or the cost-ratio inequality fails at k.
    std::vector<std::size_t> violations;
    std::string message;
};

// Admissibility of the closed-form allocation: strictly decreasing |rho|
// across levels and w_{k-1}/w_k > (rho_{k-1}^2 - rho_k^2)/(rho_k^2 - rho_{k+1}^2)
// with rho_{K+1} = 0. The strict inequality keeps every allocation ratio real
// and positive.
CostRatioCheck check_cost_ratio(const PilotStatistics& stats, const std::vector<double>& w);

// Closed-form optimal allocation:
//   r_k = sqrt(w_1 (rho_k^2 - rho_{k+1}^2) / (w_k (1 - rho_2^2))),
//   m_k = floor(p_eff r_k / (w . r)) per level, forced non-decreasing,
//   alpha_k = rho_k sigma_1 / sigma_k.
// Throws AllocationError when inadmissible (instructing perturbation) or when
// the budget is too small for m_1 >= 2.
AllocationPlan optimal_allocation(const PilotStatistics& stats, const std::vector<double>& w,
                                  double p, std::size_t d);

// Analytical variance of the multifidelity variance estimator, evaluated
// verbatim from (delta, sigma, tau, q, rho, alpha, m). Requires m_k >= 4.
double analytic_estimator_variance(const PilotStatistics& stats, const AllocationPlan& plan);

}  // namespace mfsens
