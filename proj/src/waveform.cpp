#include "mfsens/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "mfsens/errors.hpp"

namespace mfsens {

InflowWaveform::InflowWaveform(std::vector<double> t, std::vector<double> q, double period)
    : t_(std::move(t)), q_(std::move(q)), period_(period) {
    if (t_.size() != q_.size() || t_.size() < 2) {
        throw DomainError("InflowWaveform: need >= 2 (t, Q) samples of equal length");
    }
    if (!(period_ > 0.0)) throw DomainError("InflowWaveform: period must be positive");
    for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
        if (!(t_[i] < t_[i + 1])) throw DomainError("InflowWaveform: times must be strictly increasing");
    }
    if (t_.front() < 0.0 || t_.back() > period_) {
        throw DomainError("InflowWaveform: times must lie in [0, period]");
    }
    // A sample at exactly t = period duplicates t = 0 under periodic extension.
    if (t_.back() == period_) {
        if (t_.front() == 0.0 && std::abs(q_.back() - q_.front()) >
                                     1e-9 * std::max(1.0, std::abs(q_.front()))) {
            throw DomainError("InflowWaveform: Q(0) != Q(period)");
        }
        t_.pop_back();
        q_.pop_back();
    }
}

double InflowWaveform::flow(double time) const {
    double tau = std::fmod(time, period_);
    if (tau < 0.0) tau += period_;
    auto it = std::upper_bound(t_.begin(), t_.end(), tau);
    std::size_t hi = static_cast<std::size_t>(it - t_.begin());
    double t0, t1, q0, q1;
    if (hi == 0) {  // before the first sample: wrap from the last one
        t0 = t_.back() - period_;
        q0 = q_.back();
        t1 = t_.front();
        q1 = q_.front();
    } else if (hi == t_.size()) {  // after the last sample: wrap to the first
        t0 = t_.back();
        q0 = q_.back();
        t1 = t_.front() + period_;
        q1 = q_.front();
    } else {
        t0 = t_[hi - 1];
        q0 = q_[hi - 1];
        t1 = t_[hi];
        q1 = q_[hi];
    }
    const double w = (tau - t0) / (t1 - t0);
    return q0 + w * (q1 - q0);
}

double InflowWaveform::mean_flow() const {
    // Trapezoid over one period including the wrap segment.
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
        acc += 0.5 * (q_[i] + q_[i + 1]) * (t_[i + 1] - t_[i]);
    }
    acc += 0.5 * (q_.back() + q_.front()) * (period_ - t_.back() + t_.front());
    return acc / period_;
}

double InflowWaveform::peak_flow() const {
    return *std::max_element(q_.begin(), q_.end());
}

InflowWaveform InflowWaveform::rescaled(double mean, double gain) const {
    const double old_mean = mean_flow();
    std::vector<double> q(q_.size());
    for (std::size_t i = 0; i < q_.size(); ++i) {
        q[i] = mean + gain * (q_[i] - old_mean);
    }
    return InflowWaveform(t_, std::move(q), period_);
}

InflowWaveform InflowWaveform::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("InflowWaveform: cannot open '" + path + "'");
    std::vector<double> t, q;
    double period = 0.0;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double ti, qi;
        if (ls >> ti >> qi) {
            t.push_back(ti);
            q.push_back(qi);
        }
    }
    if (t.size() < 2) throw DomainError("InflowWaveform: '" + path + "' holds fewer than 2 samples");
    period = t.back();  // convention: the table spans one full period
    return InflowWaveform(std::move(t), std::move(q), period);
}

void InflowWaveform::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DomainError("InflowWaveform: cannot write '" + path + "'");
    out << "# inflow waveform: time [s], flow [m^3/s]; period " << period_ << " s\n";
    out.precision(17);
    for (std::size_t i = 0; i < t_.size(); ++i) {
        out << t_[i] << " " << q_[i] << "\n";
    }
    out << period_ << " " << q_.front() << "\n";
}

namespace {

// Truncated Fourier fit of a physiological common-carotid flow shape
// (units ml/s, period 1 s): steep systolic upstroke peaking near t = 0.13 s,
// dicrotic notch near t = 0.36 s, slow diastolic decay.
constexpr int kHarmonics = 10;
constexpr double kShapeA0 = 8.45525;
constexpr double kShapeA[kHarmonics] = {1.418504, -1.047116, -2.4591,  -1.140694, -0.458412,
                                        0.010261, 0.334466,  0.195851, 0.194809,  0.113078};
constexpr double kShapeB[kHarmonics] = {3.547486,  3.02244,   0.669175,  -0.789561, -0.665674,
                                        -0.720878, -0.283883, -0.078735, -0.006988, 0.108778};

// Calibrated once against the 1D solver at the mean inputs (see
// tools/calibrate_waveform): mean flow and pulsatile gain on the shape above.
constexpr double kCarotidMeanFlow = 6.3029e-06;   // m^3/s
constexpr double kCarotidPulseGain = 1.1029;      // on (shape - mean), ml/s -> ml/s

double shape_mls(double t) {
    double s = kShapeA0;
    for (int k = 1; k <= kHarmonics; ++k) {
        const double w = 2.0 * std::numbers::pi * k * t;
        s += kShapeA[k - 1] * std::cos(w) + kShapeB[k - 1] * std::sin(w);
    }
    return s;
}

}  // namespace

InflowWaveform InflowWaveform::default_carotid() {
    constexpr std::size_t kTable = 200;
    constexpr double kPeriod = 1.0;
    std::vector<double> t(kTable), q(kTable);
    for (std::size_t i = 0; i < kTable; ++i) {
        t[i] = kPeriod * static_cast<double>(i) / kTable;
        q[i] = kCarotidMeanFlow + 1e-6 * kCarotidPulseGain * (shape_mls(t[i]) - kShapeA0);
    }
    return InflowWaveform(std::move(t), std::move(q), kPeriod);
}

}  // namespace mfsens
