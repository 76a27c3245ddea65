#include "mfsens/analytic.hpp"

#include <cmath>

#include "mfsens/errors.hpp"

namespace mfsens {

double analytic_model(AnalyticKind kind, std::span<const double> z) {
    switch (kind) {
        case AnalyticKind::ishigami: {
            if (z.size() != 3) throw DomainError("analytic_model: ishigami needs d = 3");
            constexpr double a = 7.0, b = 0.1;
            const double z3sq = z[2] * z[2];
            return std::sin(z[0]) + a * std::sin(z[1]) * std::sin(z[1]) +
                   b * z3sq * z3sq * std::sin(z[0]);
        }
        case AnalyticKind::linear_additive: {
            if (z.empty()) throw DomainError("analytic_model: empty input");
            double s = 0.0;
            for (double v : z) s += v;
            return s;
        }
        case AnalyticKind::constant: {
            if (z.empty()) throw DomainError("analytic_model: empty input");
            return 1.0;
        }
        case AnalyticKind::g_function: {
            if (z.empty()) throw DomainError("analytic_model: empty input");
            double p = 1.0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                const double aj = static_cast<double>(j);
                p *= (std::abs(4.0 * z[j] - 2.0) + aj) / (1.0 + aj);
            }
            return p;
        }
    }
    throw DomainError("analytic_model: unknown kind");
}

}  // namespace mfsens
