#include "mfsens/pilot.hpp"

#include <cmath>

#include "mfsens/errors.hpp"
#include "mfsens/estimators.hpp"

namespace mfsens {
namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double mx = sample_mean(x);
    const double my = sample_mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t s = 0; s < x.size(); ++s) {
        const double dx = x[s] - mx;
        const double dy = y[s] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DomainError("pilot_statistics: degenerate statistics (constant model output)");
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

PilotStatistics pilot_statistics(const std::vector<std::vector<double>>& evals) {
    if (evals.empty()) throw DomainError("pilot_statistics: no models");
    const std::size_t n = evals[0].size();
    if (n < 5) throw DomainError("pilot_statistics: need n_pilot >= 5");
    for (const auto& v : evals) {
        if (v.size() != n) throw DomainError("pilot_statistics: models evaluated on different points");
    }

    const std::size_t K = evals.size();
    PilotStatistics st;
    st.n_pilot = n;
    st.mu.resize(K);
    st.sigma.resize(K);
    st.delta.resize(K);
    st.tau.resize(K);
    st.rho.assign(K, 1.0);
    st.q.assign(K, 1.0);

    std::vector<std::vector<double>> g(K, std::vector<double>(n));
    for (std::size_t k = 0; k < K; ++k) {
        const MeanVar mv = sample_mean_var(evals[k]);
        st.mu[k] = mv.mean;
        st.sigma[k] = std::sqrt(mv.var);
        double m4 = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            const double dv = evals[k][s] - mv.mean;
            const double dv2 = dv * dv;
            g[k][s] = dv2;
            m4 += dv2 * dv2;
        }
        st.delta[k] = m4 / static_cast<double>(n);
        st.tau[k] = std::sqrt(sample_mean_var(g[k]).var);
    }
    for (std::size_t k = 1; k < K; ++k) {
        st.rho[k] = pearson(evals[0], evals[k]);
        st.q[k] = pearson(g[0], g[k]);
    }
    return st;
}

}  // namespace mfsens
