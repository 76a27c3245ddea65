#include "mfsens/sobol.hpp"

#include <array>
#include <string>

namespace mfsens {
namespace {

// Joe & Kuo "new-joe-kuo-6" primitive polynomials and initial m-values for
// dimensions 2..22. poly encodes x^s + a_1 x^{s-1} + ... + a_{s-1} x + 1
// including the leading and trailing coefficients.
struct JoeKuoRow {
    std::uint32_t poly;
    std::array<std::uint32_t, 7> m;  // m_1..m_s, zero-padded
};

constexpr std::array<JoeKuoRow, 21> kJoeKuo = {{
    {3, {1}},
    {7, {1, 3}},
    {11, {1, 3, 1}},
    {13, {1, 1, 1}},
    {19, {1, 1, 3, 3}},
    {25, {1, 3, 5, 13}},
    {37, {1, 1, 5, 5, 17}},
    {41, {1, 1, 5, 5, 5}},
    {47, {1, 1, 7, 11, 19}},
    {55, {1, 1, 5, 1, 1}},
    {59, {1, 1, 1, 3, 11}},
    {61, {1, 3, 5, 5, 31}},
    {67, {1, 3, 3, 9, 7, 49}},
    {91, {1, 1, 1, 15, 21, 21}},
    {97, {1, 3, 1, 13, 27, 49}},
    {103, {1, 1, 1, 15, 7, 5}},
    {109, {1, 3, 1, 15, 13, 25}},
    {115, {1, 1, 5, 5, 19, 61}},
    {131, {1, 3, 7, 11, 23, 15, 103}},
    {137, {1, 3, 7, 13, 13, 15, 69}},
    {143, {1, 1, 3, 13, 7, 35, 63}},
}};

constexpr double kScale = 1.0 / 4294967296.0;  // 2^-32

int degree(std::uint32_t poly) {
    int s = -1;
    while (poly) {
        poly >>= 1;
        ++s;
    }
    return s;
}

}  // namespace

SobolSequence::SobolSequence(std::size_t dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw DomainError("SobolSequence: dimension " + std::to_string(dim) +
                          " outside supported range 1.." + std::to_string(kMaxDim) +
                          " (direction-number table)");
    }
    dirs_.assign(dim * kBits, 0);

    // First dimension: v_i = 2^(31-i).
    for (std::size_t i = 0; i < kBits; ++i) {
        dirs_[i] = 1u << (31 - i);
    }

    std::array<std::uint32_t, kBits> m{};
    for (std::size_t d = 2; d <= dim; ++d) {
        const JoeKuoRow& row = kJoeKuo[d - 2];
        const int s = degree(row.poly);
        for (int i = 0; i < s; ++i) m[i] = row.m[i];
        for (std::size_t i = s; i < kBits; ++i) {
            std::uint32_t mi = m[i - s] ^ (m[i - s] << s);
            for (int k = 1; k < s; ++k) {
                if ((row.poly >> (s - k)) & 1u) mi ^= m[i - k] << k;
            }
            m[i] = mi;
        }
        for (std::size_t i = 0; i < kBits; ++i) {
            dirs_[(d - 1) * kBits + i] = m[i] << (31 - i);
        }
    }
}

void SobolSequence::point(std::uint64_t index, double* out) const {
    if (index >= (1ull << kBits)) {
        throw DomainError("SobolSequence: index exceeds 32-bit sequence length");
    }
    // Gray-code identity: x_n = XOR of v_j over the set bits of gray(n).
    std::uint64_t gray = index ^ (index >> 1);
    for (std::size_t d = 0; d < dim_; ++d) {
        std::uint32_t x = 0;
        const std::uint32_t* v = dirs_.data() + d * kBits;
        std::uint64_t g = gray;
        std::size_t bit = 0;
        while (g) {
            if (g & 1u) x ^= v[bit];
            g >>= 1;
            ++bit;
        }
        out[d] = static_cast<double>(x) * kScale;
    }
}

std::vector<double> SobolSequence::point(std::uint64_t index) const {
    std::vector<double> out(dim_);
    point(index, out.data());
    return out;
}

Matrix sobol_points(std::size_t dim, std::size_t n, std::uint64_t skip) {
    if (n < 1) throw DomainError("sobol_points: n must be >= 1");
    SobolSequence seq(dim);
    Matrix pts(n, dim);
    for (std::size_t s = 0; s < n; ++s) {
        seq.point(skip + s, pts.row(s));
    }
    return pts;
}

}  // namespace mfsens
