#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfsens/analytic.hpp"
#include "mfsens/hemo.hpp"
#include "mfsens/sampling.hpp"

namespace mfsens {

enum class ModelKind { oned, zerod, zerod_perturbed, analytic, surrogate_hf };

struct ModelSpec {
    std::string id;
    ModelKind kind = ModelKind::oned;
    double cost = 1.0;  // equivalent high-fidelity solves
    AnalyticKind analytic = AnalyticKind::ishigami;  // for kind == analytic
};

// Full description of a study: input space, model stack (highest fidelity
// first), QoIs, budgets, pilot size, perturbation factor, replicate count,
// solver constants, and the inflow waveform.
struct CampaignConfig {
    ParameterSpace space;
    std::vector<ModelSpec> models;
    std::vector<std::string> qois;  // of {"psys", "pp", "drmax"} or {"value"}
    std::vector<double> budgets;
    std::size_t n_pilot = 150;
    double phi = 1.0;
    std::size_t replicates = 100;
    std::uint64_t skip = 1;
    std::size_t pc_order = 4;
    std::size_t jobs = 0;
    HemoConfig hemo;
    std::string waveform_path;  // empty: calibrated default carotid

    std::vector<double> costs() const;
    std::size_t qoi_index(const std::string& name) const;
    void validate() const;

    // Stable hash of every field that affects model outputs; keys the
    // evaluation cache.
    std::string digest() const;
};

CampaignConfig load_config(const std::string& path);

// Built-in config of the common-carotid study (1D/0D pair, Table-style
// defaults); used when no config file is given.
CampaignConfig default_cca_config();

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

}  // namespace mfsens
