#pragma once

#include <span>

namespace mfsens {

// Closed-form test functions for estimator verification. Each comes with an
// analytic variance decomposition used as a test oracle.
enum class AnalyticKind {
    ishigami,         // d = 3 on U(-pi, pi)^3, a = 7, b = 0.1
    linear_additive,  // sum of inputs
    constant,         // 1.0 for any input
    g_function,       // Sobol' g-function, a_j = j
};

double analytic_model(AnalyticKind kind, std::span<const double> z);

}  // namespace mfsens
