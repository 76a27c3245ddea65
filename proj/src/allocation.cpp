#include "mfsens/allocation.hpp"

#include <cmath>

#include "mfsens/errors.hpp"

namespace mfsens {
namespace {

double rho_sq(const PilotStatistics& stats, std::size_t k) {
    // Convention: rho_{1,K+1} = 0.
    if (k >= stats.n_models()) return 0.0;
    return stats.rho[k] * stats.rho[k];
}

}  // namespace

CostRatioCheck check_cost_ratio(const PilotStatistics& stats, const std::vector<double>& w) {
    const std::size_t K = stats.n_models();
    if (w.size() != K) throw DomainError("check_cost_ratio: one cost per model");
    if (K < 2) throw DomainError("check_cost_ratio: needs K >= 2");

    CostRatioCheck out;
    out.admissible = true;
    for (std::size_t k = 1; k < K; ++k) {  // levels 2..K, zero-based k
        const bool ordered = std::abs(stats.rho[k - 1]) > std::abs(stats.rho[k]);
        bool ratio_ok = false;
        if (ordered) {
            const double num = rho_sq(stats, k - 1) - rho_sq(stats, k);
            const double den = rho_sq(stats, k) - rho_sq(stats, k + 1);
            ratio_ok = den > 0.0 && w[k - 1] / w[k] > num / den;
        }
        if (!ordered || !ratio_ok) {
            out.admissible = false;
            out.violations.push_back(k + 1);  // 1-based level
            out.message += (out.message.empty() ? "" : "; ");
            out.message += !ordered
                               ? "correlation ordering violated at level k=" + std::to_string(k + 1)
                               : "cost-ratio inequality violated at level k=" + std::to_string(k + 1);
        }
    }
    return out;
}

AllocationPlan optimal_allocation(const PilotStatistics& stats, const std::vector<double>& w,
                                  double p, std::size_t d) {
    const std::size_t K = stats.n_models();
    if (w.size() != K) throw DomainError("optimal_allocation: one cost per model");
    if (!(p > 0.0)) throw DomainError("optimal_allocation: budget must be positive");

    if (K >= 2) {
        const CostRatioCheck check = check_cost_ratio(stats, w);
        if (!check.admissible) {
            throw AllocationError(
                "optimal_allocation: pilot statistics inadmissible (" + check.message +
                "); perturb the low-fidelity model to restore the correlation ordering");
        }
    }

    AllocationPlan plan;
    plan.p = p;
    plan.p_eff = p / static_cast<double>(d + 2);
    plan.admissible = true;
    plan.r.assign(K, 1.0);
    plan.alpha.assign(K, 1.0);
    plan.m.assign(K, 0);

    const double one_minus_rho2 = 1.0 - rho_sq(stats, 1);
    for (std::size_t k = 1; k < K; ++k) {
        plan.r[k] = std::sqrt(w[0] * (rho_sq(stats, k) - rho_sq(stats, k + 1)) /
                              (w[k] * one_minus_rho2));
        plan.alpha[k] = stats.rho[k] * stats.sigma[0] / stats.sigma[k];
    }

    double wr = 0.0;
    for (std::size_t k = 0; k < K; ++k) wr += w[k] * plan.r[k];

    std::int64_t prev = 0;
    for (std::size_t k = 0; k < K; ++k) {
        auto mk = static_cast<std::int64_t>(std::floor(plan.p_eff * plan.r[k] / wr));
        if (mk < prev) mk = prev;  // keep the allocation nested
        plan.m[k] = mk;
        prev = mk;
    }
    if (plan.m[0] < 2) {
        throw AllocationError("optimal_allocation: budget too small, m_1 = " +
                              std::to_string(plan.m[0]) + " < 2");
    }
    return plan;
}

double analytic_estimator_variance(const PilotStatistics& stats, const AllocationPlan& plan) {
    const std::size_t K = stats.n_models();
    if (plan.m.size() != K) throw DomainError("analytic_estimator_variance: plan/stats mismatch");
    for (std::int64_t mk : plan.m) {
        if (mk < 4) throw DomainError("analytic_estimator_variance: every m_k must be >= 4");
    }

    auto mterm = [&](std::size_t k, double m) {
        const double s4 = std::pow(stats.sigma[k], 4);
        return (stats.delta[k] - (m - 3.0) / (m - 1.0) * s4) / m;
    };
    auto cterm = [&](std::size_t k, double m) {
        const double c = stats.q[k] * stats.tau[0] * stats.tau[k] +
                         2.0 / (m - 1.0) * rho_sq(stats, k) * stats.sigma[0] * stats.sigma[0] *
                             stats.sigma[k] * stats.sigma[k];
        return c / m;
    };

    const double m1 = static_cast<double>(plan.m[0]);
    double var = mterm(0, m1);
    for (std::size_t k = 1; k < K; ++k) {
        const double mk = static_cast<double>(plan.m[k]);
        const double mk1 = static_cast<double>(plan.m[k - 1]);
        var += plan.alpha[k] * plan.alpha[k] * (mterm(k, mk1) - mterm(k, mk));
        var += 2.0 * plan.alpha[k] * (cterm(k, mk) - cterm(k, mk1));
    }
    return var;
}

}  // namespace mfsens
