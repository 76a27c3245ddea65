#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfsens/matrix.hpp"

namespace mfsens {

struct Parameter {
    std::string name;
    double lower = 0.0;  // SI
    double upper = 0.0;  // SI
    std::string unit;
};

// The d independent uniform inputs. Order is stable and defines column
// indices everywhere downstream.
class ParameterSpace {
public:
    ParameterSpace() = default;
    explicit ParameterSpace(std::vector<Parameter> params);

    std::size_t dim() const { return params_.size(); }
    const Parameter& param(std::size_t j) const { return params_[j]; }
    const std::vector<Parameter>& params() const { return params_; }

    // Affine map of a unit-cube point into physical bounds (and back).
    double scale(std::size_t j, double u) const;
    double unscale(std::size_t j, double z) const;

    // n points of the d-dimensional Sobol' sequence scaled to bounds.
    Matrix sample(std::size_t n, std::uint64_t skip) const;

private:
    std::vector<Parameter> params_;
};

// Saltelli sample matrices at size n. C[j] equals B with column j replaced
// by column j of A; estimating all indices costs (d+2)*n evaluations per
// fidelity.
struct SampleBundle {
    Matrix A;
    Matrix B;
    std::vector<Matrix> C;
    std::size_t n = 0;
    std::uint64_t skip = 0;
};

// Draws a 2d-dimensional Sobol' sequence of length n; columns 1..d scaled to
// bounds form A and columns d+1..2d form B, so A and B never share a
// generating point. `skip` discards leading sequence points (default 1 keeps
// the all-zeros origin out of the physics solvers).
SampleBundle build_bundle(const ParameterSpace& space, std::size_t n, std::uint64_t skip = 1);

}  // namespace mfsens
