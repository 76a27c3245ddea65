#pragma once

namespace mfsens {

// All computation is in SI; these factors convert at I/O boundaries only.
inline constexpr double kPaPerMmHg = 133.322;

inline constexpr double pa_to_mmhg(double pa) { return pa / kPaPerMmHg; }
inline constexpr double mmhg_to_pa(double mmhg) { return mmhg * kPaPerMmHg; }
inline constexpr double m_to_mm(double m) { return m * 1e3; }
inline constexpr double mm_to_m(double mm) { return mm * 1e-3; }

}  // namespace mfsens
