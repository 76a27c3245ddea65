#include "mfsens/pce.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>

#include "mfsens/errors.hpp"
#include "mfsens/estimators.hpp"

namespace mfsens {

PcBasis::PcBasis(std::size_t d, std::size_t order) : d_(d), order_(order) {
    if (d < 1) throw DomainError("PcBasis: need d >= 1");
    // Graded ordering: by total degree, lexicographic within a degree.
    std::vector<std::uint16_t> idx(d, 0);
    for (std::size_t deg = 0; deg <= order; ++deg) {
        // Enumerate all multi-indices with |idx| == deg.
        std::fill(idx.begin(), idx.end(), 0);
        idx[0] = static_cast<std::uint16_t>(deg);
        while (true) {
            terms_.push_back(idx);
            // Next composition of deg into d parts (colex step).
            std::size_t i = 0;
            while (i + 1 < d && idx[i] == 0) ++i;
            if (i + 1 >= d) break;
            const std::uint16_t head = idx[i];
            idx[i] = 0;
            idx[0] = static_cast<std::uint16_t>(head - 1);
            ++idx[i + 1];
        }
    }
}

double legendre_norm(unsigned degree, double x) {
    double pm1 = 1.0, p = x;
    if (degree == 0) return 1.0;
    for (unsigned n = 1; n < degree; ++n) {
        const double pn1 = ((2.0 * n + 1.0) * x * p - n * pm1) / (n + 1.0);
        pm1 = p;
        p = pn1;
    }
    return std::sqrt(2.0 * degree + 1.0) * p;
}

double legendre_eval(const std::vector<std::uint16_t>& multi_index,
                     std::span<const double> z_unit) {
    if (multi_index.size() != z_unit.size()) {
        throw DomainError("legendre_eval: multi-index / point dimension mismatch");
    }
    double v = 1.0;
    for (std::size_t j = 0; j < multi_index.size(); ++j) {
        if (multi_index[j] != 0) v *= legendre_norm(multi_index[j], z_unit[j]);
    }
    return v;
}

double PcSurrogate::evaluate(std::span<const double> z_physical) const {
    std::vector<double> u(space.dim());
    for (std::size_t j = 0; j < space.dim(); ++j) {
        u[j] = 2.0 * space.unscale(j, z_physical[j]) - 1.0;
    }
    double y = 0.0;
    for (std::size_t p = 0; p < basis.count(); ++p) {
        y += c[p] * legendre_eval(basis.term(p), u);
    }
    return y;
}

double PcSurrogate::variance() const {
    double v = 0.0;
    for (std::size_t p = 1; p < c.size(); ++p) v += c[p] * c[p];
    return v;
}

void PcSurrogate::save_coefficients(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DomainError("PcSurrogate: cannot write '" + path + "'");
    out << "# multi-index (" << basis.d() << " entries), coefficient\n";
    out.precision(17);
    for (std::size_t p = 0; p < basis.count(); ++p) {
        for (std::uint16_t k : basis.term(p)) out << k << " ";
        out << c[p] << "\n";
    }
}

PcSurrogate fit_pce_points(const ParameterSpace& space, std::size_t order, const Matrix& Z,
                           const std::vector<double>& y) {
    const std::size_t n = Z.rows();
    const std::size_t d = space.dim();
    if (Z.cols() != d) throw DomainError("fit_pce: sample matrix width != d");
    if (y.size() != n) throw DomainError("fit_pce: evaluations not aligned with samples");

    PcBasis basis(d, order);
    const std::size_t P = basis.count();
    if (n < 2 * P) {
        throw DomainError("fit_pce: undersampled system, need >= " + std::to_string(2 * P) +
                          " samples for " + std::to_string(P) + " coefficients");
    }

    Eigen::MatrixXd X(n, P);
    std::vector<double> u(d);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t j = 0; j < d; ++j) u[j] = 2.0 * space.unscale(j, Z(s, j)) - 1.0;
        for (std::size_t p = 0; p < P; ++p) X(s, p) = legendre_eval(basis.term(p), u);
    }
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(y.data(), n);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    const Eigen::VectorXd coef = qr.solve(rhs);

    PcSurrogate sur{std::move(basis), std::vector<double>(coef.data(), coef.data() + P), space};
    const double rhs_norm = rhs.norm();
    sur.residual = rhs_norm > 0.0 ? (X * coef - rhs).norm() / rhs_norm : 0.0;
    const Eigen::MatrixXd& R = qr.matrixR();
    const double r_max = std::abs(R(0, 0));
    const double r_min = std::abs(R(P - 1, P - 1));
    sur.condition = r_min > 0.0 ? r_max / r_min : std::numeric_limits<double>::infinity();
    sur.ill_conditioned = sur.condition > 1e8;
    return sur;
}

PcSurrogate fit_pce(const ParameterSpace& space, std::size_t order,
                    const std::vector<double>& y, std::uint64_t skip) {
    const Matrix Z = space.sample(y.size(), skip);
    return fit_pce_points(space, order, Z, y);
}

SobolEstimate pc_sobol(const PcSurrogate& surrogate) {
    const std::size_t d = surrogate.basis.d();
    SobolEstimate est;
    est.method = EstimatorMethod::pc;
    est.V_hat = surrogate.variance();
    est.V_j.assign(d, 0.0);
    est.T_j.assign(d, 0.0);
    est.S_j.assign(d, 0.0);
    est.ST_j.assign(d, 0.0);

    for (std::size_t p = 1; p < surrogate.basis.count(); ++p) {
        const auto& mi = surrogate.basis.term(p);
        const double c2 = surrogate.c[p] * surrogate.c[p];
        int active = -1;
        bool sole = true;
        for (std::size_t j = 0; j < d; ++j) {
            if (mi[j] != 0) {
                est.T_j[j] += c2;  // A_{T,j}: every term with nonzero degree in j
                if (active < 0) {
                    active = static_cast<int>(j);
                } else {
                    sole = false;
                }
            }
        }
        if (sole && active >= 0) est.V_j[active] += c2;  // A_j: terms on j alone
    }
    if (est.V_hat <= 0.0) {
        est.degenerate = true;
        return est;
    }
    for (std::size_t j = 0; j < d; ++j) {
        est.S_j[j] = est.V_j[j] / est.V_hat;
        est.ST_j[j] = est.T_j[j] / est.V_hat;
    }
    return est;
}

}  // namespace mfsens
