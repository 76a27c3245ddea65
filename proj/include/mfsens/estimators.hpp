#pragma once

#include <span>
#include <string>
#include <vector>

namespace mfsens {

// Shifted (two-pass) sample moments; exact zeros for constant data so that
// degenerate models produce exactly zero Sobol' contributions.
struct MeanVar {
    double mean = 0.0;
    double var = 0.0;  // unbiased, N-1 denominator
};
double sample_mean(std::span<const double> y);
MeanVar sample_mean_var(std::span<const double> y);

// Pooled moments over the leading m rows of two aligned sample sets (2m
// values total).
double pooled_mean(std::span<const double> yA, std::span<const double> yB, std::size_t m);
double pooled_var(std::span<const double> yA, std::span<const double> yB, std::size_t m);

// Bias-corrected main-effect contribution (Owen):
//   V_j = 2N/(N-1) [ 1/N sum f(A) f(C_j) - ((E + E')/2)^2 + (V + V')/(4N) ],
// with E, V from yA and E', V' from yB.
double owen_vj(std::span<const double> yA, std::span<const double> yB,
               std::span<const double> yCj);

// Total-effect contribution: T_j = 1/(2N) sum (f(B) - f(C_j))^2.
double owen_tj(std::span<const double> yB, std::span<const double> yCj);

// Per-model, per-matrix QoI values. Model 0 is the highest fidelity; lower
// fidelities hold at least as many rows (nested sampling). One scalar QoI per
// table.
class EvalTable {
public:
    EvalTable(std::size_t n_models, std::size_t d, std::vector<double> costs,
              std::string qoi = "");

    std::size_t n_models() const { return values_.size(); }
    std::size_t d() const { return d_; }
    const std::vector<double>& costs() const { return w_; }
    const std::string& qoi() const { return qoi_; }

    std::vector<double>& yA(std::size_t k) { return values_[k][0]; }
    std::vector<double>& yB(std::size_t k) { return values_[k][1]; }
    std::vector<double>& yC(std::size_t k, std::size_t j) { return values_[k][2 + j]; }
    const std::vector<double>& yA(std::size_t k) const { return values_[k][0]; }
    const std::vector<double>& yB(std::size_t k) const { return values_[k][1]; }
    const std::vector<double>& yC(std::size_t k, std::size_t j) const { return values_[k][2 + j]; }

    // Rows available for model k (minimum across its matrices).
    std::size_t rows(std::size_t k) const;

private:
    std::size_t d_;
    std::vector<double> w_;
    std::string qoi_;
    std::vector<std::vector<std::vector<double>>> values_;  // [model][tag][row]
};

enum class EstimatorMethod { mc, mfmc, pc };

struct SobolEstimate {
    double V_hat = 0.0;
    std::vector<double> V_j;
    std::vector<double> T_j;
    std::vector<double> S_j;
    std::vector<double> ST_j;
    EstimatorMethod method = EstimatorMethod::mc;
    std::string qoi;
    bool degenerate = false;  // producing model had (near-)zero variance
};

// Single-fidelity Saltelli/Owen estimate from model `model` of the table,
// using its leading `rows` rows (0 = all).
SobolEstimate mc_sobol(const EvalTable& table, std::size_t model = 0, std::size_t rows = 0);

}  // namespace mfsens
