#include "mfsens/estimators.hpp"

#include <cmath>

#include "mfsens/errors.hpp"

namespace mfsens {

double sample_mean(std::span<const double> y) {
    if (y.empty()) throw DomainError("sample_mean: empty vector");
    // Shift by the first element: constant inputs give an exact result.
    const double ref = y[0];
    double acc = 0.0;
    for (double v : y) acc += v - ref;
    return ref + acc / static_cast<double>(y.size());
}

MeanVar sample_mean_var(std::span<const double> y) {
    if (y.size() < 2) throw DomainError("sample_mean_var: need at least 2 values");
    MeanVar out;
    out.mean = sample_mean(y);
    double acc = 0.0;
    for (double v : y) {
        const double dv = v - out.mean;
        acc += dv * dv;
    }
    out.var = acc / static_cast<double>(y.size() - 1);
    return out;
}

namespace {

void check_leading(std::span<const double> y, std::size_t m, const char* who) {
    if (m > y.size()) throw DomainError(std::string(who) + ": rows exceed available values");
}

}  // namespace

double pooled_mean(std::span<const double> yA, std::span<const double> yB, std::size_t m) {
    check_leading(yA, m, "pooled_mean");
    check_leading(yB, m, "pooled_mean");
    if (m < 1) throw DomainError("pooled_mean: need m >= 1");
    const double ref = yA[0];
    double acc = 0.0;
    for (std::size_t s = 0; s < m; ++s) acc += yA[s] - ref;
    for (std::size_t s = 0; s < m; ++s) acc += yB[s] - ref;
    return ref + acc / static_cast<double>(2 * m);
}

double pooled_var(std::span<const double> yA, std::span<const double> yB, std::size_t m) {
    if (m < 1) throw DomainError("pooled_var: need m >= 1");
    const double mean = pooled_mean(yA, yB, m);
    double acc = 0.0;
    for (std::size_t s = 0; s < m; ++s) {
        const double da = yA[s] - mean;
        const double db = yB[s] - mean;
        acc += da * da + db * db;
    }
    return acc / static_cast<double>(2 * m - 1);
}

double owen_vj(std::span<const double> yA, std::span<const double> yB,
               std::span<const double> yCj) {
    const std::size_t N = yA.size();
    if (yB.size() != N || yCj.size() != N) throw DomainError("owen_vj: length mismatch");
    if (N < 2) throw DomainError("owen_vj: need N >= 2");

    // Product mean, shifted so a constant model cancels exactly.
    const double ref = yA[0] * yCj[0];
    double acc = 0.0;
    for (std::size_t s = 0; s < N; ++s) acc += yA[s] * yCj[s] - ref;
    const double prod_mean = ref + acc / static_cast<double>(N);

    const MeanVar a = sample_mean_var(yA);
    const MeanVar b = sample_mean_var(yB);
    const double e_bar = 0.5 * (a.mean + b.mean);
    const double nd = static_cast<double>(N);
    return 2.0 * nd / (nd - 1.0) *
           (prod_mean - e_bar * e_bar + (a.var + b.var) / (4.0 * nd));
}

double owen_tj(std::span<const double> yB, std::span<const double> yCj) {
    const std::size_t N = yB.size();
    if (yCj.size() != N) throw DomainError("owen_tj: length mismatch");
    if (N < 1) throw DomainError("owen_tj: empty input");
    double acc = 0.0;
    for (std::size_t s = 0; s < N; ++s) {
        const double d = yB[s] - yCj[s];
        acc += d * d;
    }
    return acc / (2.0 * static_cast<double>(N));
}

EvalTable::EvalTable(std::size_t n_models, std::size_t d, std::vector<double> costs,
                     std::string qoi)
    : d_(d), w_(std::move(costs)), qoi_(std::move(qoi)) {
    if (n_models < 1) throw DomainError("EvalTable: need at least one model");
    if (w_.size() != n_models) throw DomainError("EvalTable: one cost per model");
    for (double wk : w_) {
        if (!(wk > 0.0)) throw DomainError("EvalTable: costs must be positive");
    }
    values_.assign(n_models, std::vector<std::vector<double>>(2 + d));
}

std::size_t EvalTable::rows(std::size_t k) const {
    std::size_t m = values_[k][0].size();
    for (const auto& v : values_[k]) m = std::min(m, v.size());
    return m;
}

SobolEstimate mc_sobol(const EvalTable& table, std::size_t model, std::size_t rows) {
    if (model >= table.n_models()) throw DomainError("mc_sobol: model index out of range");
    const std::size_t have = table.rows(model);
    const std::size_t N = rows == 0 ? have : rows;
    if (N < 2 || N > have) throw DomainError("mc_sobol: invalid row count");
    const std::size_t d = table.d();

    std::span<const double> yA(table.yA(model).data(), N);
    std::span<const double> yB(table.yB(model).data(), N);

    SobolEstimate est;
    est.method = EstimatorMethod::mc;
    est.qoi = table.qoi();
    est.V_hat = pooled_var(yA, yB, N);
    est.V_j.resize(d);
    est.T_j.resize(d);
    est.S_j.assign(d, 0.0);
    est.ST_j.assign(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        std::span<const double> yC(table.yC(model, j).data(), N);
        est.V_j[j] = owen_vj(yA, yB, yC);
        est.T_j[j] = owen_tj(yB, yC);
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
