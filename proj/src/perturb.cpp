#include "mfsens/perturb.hpp"

#include <Eigen/Dense>

#include "mfsens/errors.hpp"

namespace mfsens {

PerturbationTrend fit_perturbation(const ParameterSpace& space, const Matrix& S,
                                   const std::vector<double>& y_hf,
                                   const std::vector<double>& y_lf) {
    const std::size_t n = S.rows();
    const std::size_t d = space.dim();
    if (S.cols() != d) throw DomainError("fit_perturbation: sample matrix width != d");
    if (y_hf.size() != n || y_lf.size() != n) {
        throw DomainError("fit_perturbation: pilot vectors not aligned with sample matrix");
    }

    // Normalize to the unit cube, then center columns on their pilot means.
    Eigen::MatrixXd U(n, d);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t j = 0; j < d; ++j) U(s, j) = space.unscale(j, S(s, j));
    }
    PerturbationTrend trend;
    trend.center.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        trend.center[j] = U.col(j).mean();
        U.col(j).array() -= trend.center[j];
    }

    Eigen::MatrixXd X(n, d + 1);
    X.col(0).setOnes();
    X.rightCols(d) = U;
    Eigen::VectorXd rhs(n);
    for (std::size_t s = 0; s < n; ++s) rhs(s) = y_hf[s] - y_lf[s];

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < static_cast<Eigen::Index>(d + 1)) {
        throw DomainError("fit_perturbation: rank-deficient sample matrix");
    }
    const Eigen::VectorXd coef = qr.solve(rhs);
    trend.d.resize(d);
    for (std::size_t j = 0; j < d; ++j) trend.d[j] = coef(j + 1);  // intercept discarded
    return trend;
}

std::vector<double> apply_perturbation(const PerturbationTrend& trend,
                                       const ParameterSpace& space, const Matrix& s_prod,
                                       const std::vector<double>& y_lf_prod, double phi) {
    const std::size_t n = s_prod.rows();
    const std::size_t d = space.dim();
    if (s_prod.cols() != d || y_lf_prod.size() != n) {
        throw DomainError("apply_perturbation: shape mismatch");
    }
    std::vector<double> out(n);
    for (std::size_t s = 0; s < n; ++s) {
        double drift = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            drift += (space.unscale(j, s_prod(s, j)) - trend.center[j]) * trend.d[j];
        }
        out[s] = y_lf_prod[s] - phi * drift;
    }
    return out;
}

std::vector<double> perturb_lowfid(const std::vector<double>& y_hf,
                                   const std::vector<double>& y_lf, const Matrix& S,
                                   const ParameterSpace& space, double phi,
                                   const Matrix& s_prod, const std::vector<double>& y_lf_prod) {
    const PerturbationTrend trend = fit_perturbation(space, S, y_hf, y_lf);
    return apply_perturbation(trend, space, s_prod, y_lf_prod, phi);
}

}  // namespace mfsens
