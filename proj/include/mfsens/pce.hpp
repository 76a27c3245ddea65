#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfsens/matrix.hpp"
#include "mfsens/sampling.hpp"

namespace mfsens {

// Total-degree multi-index basis of products of normalized Legendre
// polynomials, orthonormal under the product uniform measure on [-1, 1]^d.
// Term 0 is the constant.
class PcBasis {
public:
    PcBasis(std::size_t d, std::size_t order);

    std::size_t d() const { return d_; }
    std::size_t order() const { return order_; }
    std::size_t count() const { return terms_.size(); }
    const std::vector<std::uint16_t>& term(std::size_t p) const { return terms_[p]; }

private:
    std::size_t d_;
    std::size_t order_;
    std::vector<std::vector<std::uint16_t>> terms_;
};

// Normalized univariate Legendre polynomial value, orthonormal w.r.t. the
// uniform density 1/2 on [-1, 1].
double legendre_norm(unsigned degree, double x);

// Product basis function for a multi-index at a point in [-1, 1]^d.
double legendre_eval(const std::vector<std::uint16_t>& multi_index,
                     std::span<const double> z_unit);

struct PcSurrogate {
    PcBasis basis;
    std::vector<double> c;  // coefficients, QoI units
    ParameterSpace space;
    double residual = 0.0;       // relative L2 training residual
    double condition = 0.0;      // design-matrix condition estimate
    bool ill_conditioned = false;

    double evaluate(std::span<const double> z_physical) const;

    // Variance of the expansion: sum of squared non-constant coefficients.
    double variance() const;

    // Plain-text audit table: one line per term, multi-index then coefficient.
    void save_coefficients(const std::string& path) const;
};

// Least-squares fit on the model evaluations at the given physical sample
// points (rows of Z). Requires at least 2x as many samples as coefficients.
PcSurrogate fit_pce_points(const ParameterSpace& space, std::size_t order, const Matrix& Z,
                           const std::vector<double>& y);

// Convenience: evaluations are assumed ordered along the d-dimensional
// Sobol' sequence with the given skip (the campaign's training convention).
PcSurrogate fit_pce(const ParameterSpace& space, std::size_t order,
                    const std::vector<double>& y, std::uint64_t skip = 1);

struct SobolEstimate;
SobolEstimate pc_sobol(const PcSurrogate& surrogate);

}  // namespace mfsens
