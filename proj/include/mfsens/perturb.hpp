#pragma once

#include <vector>

#include "mfsens/matrix.hpp"
#include "mfsens/sampling.hpp"

namespace mfsens {

// Linear trend of the high-/low-fidelity discrepancy, fitted by ordinary
// least squares on the centered, bound-normalized pilot sample matrix (with
// an intercept column that is discarded from the perturbation).
struct PerturbationTrend {
    std::vector<double> d;        // slope per input, normalized coordinates
    std::vector<double> center;   // pilot column means, normalized coordinates
};

PerturbationTrend fit_perturbation(const ParameterSpace& space, const Matrix& S,
                                   const std::vector<double>& y_hf,
                                   const std::vector<double>& y_lf);

// y_lf_prod - phi * (s_prod . d) with s_prod normalized and centered by the
// pilot constants.
std::vector<double> apply_perturbation(const PerturbationTrend& trend,
                                       const ParameterSpace& space, const Matrix& s_prod,
                                       const std::vector<double>& y_lf_prod, double phi);

// One-shot form: fit on the pilot, apply to the production vector.
std::vector<double> perturb_lowfid(const std::vector<double>& y_hf,
                                   const std::vector<double>& y_lf, const Matrix& S,
                                   const ParameterSpace& space, double phi,
                                   const Matrix& s_prod, const std::vector<double>& y_lf_prod);

}  // namespace mfsens
