#include "mfsens/sampling.hpp"

#include "mfsens/sobol.hpp"

namespace mfsens {

ParameterSpace::ParameterSpace(std::vector<Parameter> params) : params_(std::move(params)) {
    for (const Parameter& p : params_) {
        if (!(p.lower < p.upper)) {
            throw DomainError("ParameterSpace: parameter '" + p.name +
                              "' needs lower < upper");
        }
    }
}

double ParameterSpace::scale(std::size_t j, double u) const {
    const Parameter& p = params_[j];
    return p.lower + u * (p.upper - p.lower);
}

double ParameterSpace::unscale(std::size_t j, double z) const {
    const Parameter& p = params_[j];
    return (z - p.lower) / (p.upper - p.lower);
}

Matrix ParameterSpace::sample(std::size_t n, std::uint64_t skip) const {
    Matrix pts = sobol_points(dim(), n, skip);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t j = 0; j < dim(); ++j) {
            pts(s, j) = scale(j, pts(s, j));
        }
    }
    return pts;
}

SampleBundle build_bundle(const ParameterSpace& space, std::size_t n, std::uint64_t skip) {
    if (n < 2) throw DomainError("build_bundle: n must be >= 2");
    const std::size_t d = space.dim();

    Matrix unit = sobol_points(2 * d, n, skip);

    SampleBundle bundle;
    bundle.n = n;
    bundle.skip = skip;
    bundle.A = Matrix(n, d);
    bundle.B = Matrix(n, d);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t j = 0; j < d; ++j) {
            bundle.A(s, j) = space.scale(j, unit(s, j));
            bundle.B(s, j) = space.scale(j, unit(s, d + j));
        }
    }
    bundle.C.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        Matrix cj = bundle.B;
        for (std::size_t s = 0; s < n; ++s) cj(s, j) = bundle.A(s, j);
        bundle.C.push_back(std::move(cj));
    }
    return bundle;
}

}  // namespace mfsens
