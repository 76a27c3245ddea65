#pragma once

#include <cstdint>
#include <vector>

#include "mfsens/matrix.hpp"

namespace mfsens {

// Unscrambled Sobol' low-discrepancy sequence (Joe & Kuo direction numbers,
// 32-bit precision). Index 0 is the sequence origin. Points are addressed
// directly through the Gray-code identity, so generation is stateless and
// any subsequence block can be produced without walking the whole sequence.
class SobolSequence {
public:
    static constexpr std::size_t kMaxDim = 22;
    static constexpr std::size_t kBits = 32;

    explicit SobolSequence(std::size_t dim);

    std::size_t dim() const { return dim_; }

    // Point at `index`, written to out[0..dim).
    void point(std::uint64_t index, double* out) const;
    std::vector<double> point(std::uint64_t index) const;

private:
    std::size_t dim_;
    std::vector<std::uint32_t> dirs_;  // dirs_[d * kBits + bit]
};

// n points of the dim-dimensional sequence after discarding the first `skip`
// points. Row s holds point (skip + s).
Matrix sobol_points(std::size_t dim, std::size_t n, std::uint64_t skip);

}  // namespace mfsens
