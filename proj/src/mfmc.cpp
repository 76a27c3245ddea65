#include "mfsens/mfmc.hpp"

#include "mfsens/errors.hpp"

namespace mfsens {
namespace {

void check_plan(const EvalTable& table, const AllocationPlan& plan) {
    const std::size_t K = table.n_models();
    if (plan.m.size() != K) throw DomainError("mfmc: plan level count != table models");
    std::int64_t prev = 2;
    for (std::size_t k = 0; k < K; ++k) {
        if (plan.m[k] < prev) throw DomainError("mfmc: allocation must be non-decreasing with m_1 >= 2");
        if (static_cast<std::size_t>(plan.m[k]) > table.rows(k)) {
            throw DomainError("mfmc: m_k exceeds evaluated rows for model " + std::to_string(k + 1));
        }
        prev = plan.m[k];
    }
}

std::span<const double> lead(const std::vector<double>& v, std::int64_t m) {
    return {v.data(), static_cast<std::size_t>(m)};
}

}  // namespace

double mfmc_mean(const EvalTable& table, const AllocationPlan& plan) {
    check_plan(table, plan);
    double est = pooled_mean(lead(table.yA(0), plan.m[0]), lead(table.yB(0), plan.m[0]),
                             static_cast<std::size_t>(plan.m[0]));
    for (std::size_t k = 1; k < table.n_models(); ++k) {
        const double hi = pooled_mean(lead(table.yA(k), plan.m[k]), lead(table.yB(k), plan.m[k]),
                                      static_cast<std::size_t>(plan.m[k]));
        const double lo = pooled_mean(lead(table.yA(k), plan.m[k - 1]),
                                      lead(table.yB(k), plan.m[k - 1]),
                                      static_cast<std::size_t>(plan.m[k - 1]));
        est += plan.alpha[k] * (hi - lo);
    }
    return est;
}

double mfmc_variance(const EvalTable& table, const AllocationPlan& plan) {
    check_plan(table, plan);
    double est = pooled_var(lead(table.yA(0), plan.m[0]), lead(table.yB(0), plan.m[0]),
                            static_cast<std::size_t>(plan.m[0]));
    for (std::size_t k = 1; k < table.n_models(); ++k) {
        const double hi = pooled_var(lead(table.yA(k), plan.m[k]), lead(table.yB(k), plan.m[k]),
                                     static_cast<std::size_t>(plan.m[k]));
        const double lo = pooled_var(lead(table.yA(k), plan.m[k - 1]),
                                     lead(table.yB(k), plan.m[k - 1]),
                                     static_cast<std::size_t>(plan.m[k - 1]));
        est += plan.alpha[k] * (hi - lo);
    }
    return est;
}

MfmcSobolResult mfmc_sobol(const EvalTable& table, const AllocationPlan& plan) {
    check_plan(table, plan);
    const std::size_t K = table.n_models();
    const std::size_t d = table.d();

    MfmcSobolResult out;
    SobolEstimate& est = out.estimate;
    est.method = EstimatorMethod::mfmc;
    est.qoi = table.qoi();
    est.V_hat = mfmc_variance(table, plan);
    est.V_j.assign(d, 0.0);
    est.T_j.assign(d, 0.0);
    est.S_j.assign(d, 0.0);
    est.ST_j.assign(d, 0.0);

    // Raw per-level Owen contributions at the two nested sample sizes.
    std::vector<std::vector<double>> v_mk(K, std::vector<double>(d)),
        v_mkm1(K, std::vector<double>(d)), t_mk(K, std::vector<double>(d)),
        t_mkm1(K, std::vector<double>(d));
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t j = 0; j < d; ++j) {
            v_mk[k][j] = owen_vj(lead(table.yA(k), plan.m[k]), lead(table.yB(k), plan.m[k]),
                                 lead(table.yC(k, j), plan.m[k]));
            t_mk[k][j] = owen_tj(lead(table.yB(k), plan.m[k]), lead(table.yC(k, j), plan.m[k]));
            if (k > 0) {
                v_mkm1[k][j] =
                    owen_vj(lead(table.yA(k), plan.m[k - 1]), lead(table.yB(k), plan.m[k - 1]),
                            lead(table.yC(k, j), plan.m[k - 1]));
                t_mkm1[k][j] =
                    owen_tj(lead(table.yB(k), plan.m[k - 1]), lead(table.yC(k, j), plan.m[k - 1]));
            }
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        est.V_j[j] = v_mk[0][j];
        est.T_j[j] = t_mk[0][j];
        for (std::size_t k = 1; k < K; ++k) {
            est.V_j[j] += plan.alpha[k] * (v_mk[k][j] - v_mkm1[k][j]);
            est.T_j[j] += plan.alpha[k] * (t_mk[k][j] - t_mkm1[k][j]);
        }
    }

    if (est.V_hat <= 0.0) {
        est.degenerate = true;
    } else {
        for (std::size_t j = 0; j < d; ++j) {
            est.S_j[j] = est.V_j[j] / est.V_hat;
            est.ST_j[j] = est.T_j[j] / est.V_hat;
        }
    }

    MfmcLevelTerms& terms = out.terms;
    terms.S_mk.assign(K, std::vector<double>(d, 0.0));
    terms.S_mkm1.assign(K, std::vector<double>(d, 0.0));
    terms.ST_mk.assign(K, std::vector<double>(d, 0.0));
    terms.ST_mkm1.assign(K, std::vector<double>(d, 0.0));
    if (!est.degenerate) {
        for (std::size_t k = 0; k < K; ++k) {
            for (std::size_t j = 0; j < d; ++j) {
                terms.S_mk[k][j] = v_mk[k][j] / est.V_hat;
                terms.ST_mk[k][j] = t_mk[k][j] / est.V_hat;
                if (k > 0) {
                    terms.S_mkm1[k][j] = v_mkm1[k][j] / est.V_hat;
                    terms.ST_mkm1[k][j] = t_mkm1[k][j] / est.V_hat;
                }
            }
        }
    }
    return out;
}

}  // namespace mfsens
