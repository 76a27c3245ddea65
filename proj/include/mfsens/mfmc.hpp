#pragma once

#include "mfsens/allocation.hpp"
#include "mfsens/estimators.hpp"

namespace mfsens {

// Multifidelity (control-variate) estimators over nested Saltelli tables.
// Every per-level moment pools the A and B columns (2 m_k values). With
// K = 1 these reduce bitwise to the single-fidelity estimators.

double mfmc_mean(const EvalTable& table, const AllocationPlan& plan);
double mfmc_variance(const EvalTable& table, const AllocationPlan& plan);

// Intermediate per-level index terms (normalized by the multifidelity
// variance) so the telescoping identity
//   S_mf = S^{(1)}_{m_1} + sum_k alpha_k (S^{(k)}_{m_k} - S^{(k)}_{m_{k-1}})
// holds exactly; useful for level-contribution diagnostics.
struct MfmcLevelTerms {
    // [level][input]; level 0 only uses S_mk / ST_mk.
    std::vector<std::vector<double>> S_mk, S_mkm1;
    std::vector<std::vector<double>> ST_mk, ST_mkm1;
};

struct MfmcSobolResult {
    SobolEstimate estimate;
    MfmcLevelTerms terms;
};

MfmcSobolResult mfmc_sobol(const EvalTable& table, const AllocationPlan& plan);

}  // namespace mfsens
