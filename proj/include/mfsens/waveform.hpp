#pragma once

#include <string>
#include <vector>

namespace mfsens {

// Periodic inflow waveform given as (t, Q) samples with linear interpolation
// between samples and periodic wrap-around. Times in seconds, flow in m^3/s.
class InflowWaveform {
public:
    InflowWaveform(std::vector<double> t, std::vector<double> q, double period);

    double period() const { return period_; }
    std::size_t size() const { return t_.size(); }
    const std::vector<double>& times() const { return t_; }
    const std::vector<double>& flows() const { return q_; }

    // Flow at arbitrary time (periodic).
    double flow(double time) const;

    // Trapezoidal mean over one period.
    double mean_flow() const;
    double peak_flow() const;

    // Uniformly rescale: q -> mean + gain * (q - mean_flow()) + offset.
    InflowWaveform rescaled(double mean, double gain) const;

    // Two-column plain text (time [s], flow [m^3/s]); '#' starts a comment.
    static InflowWaveform load(const std::string& path);
    void save(const std::string& path) const;

    // Synthetic common-carotid waveform (truncated Fourier series sampled to a
    // table), calibrated so the 1D solver at mean inputs reproduces the
    // reference systolic and pulse pressures. Period 1 s.
    static InflowWaveform default_carotid();

private:
    std::vector<double> t_;
    std::vector<double> q_;
    double period_;
};

}  // namespace mfsens
