#include "mfsens/trace.hpp"

#include <algorithm>

#include "mfsens/errors.hpp"

namespace mfsens {

QoiVector extract_qoi(const StationTrace& trace) {
    if (trace.P.empty() || trace.P.size() != trace.r.size()) {
        throw DomainError("extract_qoi: empty or inconsistent trace");
    }
    const auto [pmin, pmax] = std::minmax_element(trace.P.begin(), trace.P.end());
    const auto [rmin, rmax] = std::minmax_element(trace.r.begin(), trace.r.end());
    QoiVector q;
    q.P_sys = *pmax;
    q.PP = *pmax - *pmin;
    q.dr_max = *rmax - *rmin;
    return q;
}

}  // namespace mfsens
