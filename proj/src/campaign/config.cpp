#include "mfsens/campaign/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mfsens/errors.hpp"

namespace mfsens {

using nlohmann::json;

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::oned: return "oned";
        case ModelKind::zerod: return "zerod";
        case ModelKind::zerod_perturbed: return "zerod_perturbed";
        case ModelKind::analytic: return "analytic";
        case ModelKind::surrogate_hf: return "surrogate_hf";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string& s) {
    if (s == "oned") return ModelKind::oned;
    if (s == "zerod") return ModelKind::zerod;
    if (s == "zerod_perturbed") return ModelKind::zerod_perturbed;
    if (s == "analytic") return ModelKind::analytic;
    if (s == "surrogate_hf") return ModelKind::surrogate_hf;
    throw ConfigError("unknown model kind '" + s + "'");
}

std::vector<double> CampaignConfig::costs() const {
    std::vector<double> w;
    w.reserve(models.size());
    for (const ModelSpec& m : models) w.push_back(m.cost);
    return w;
}

std::size_t CampaignConfig::qoi_index(const std::string& name) const {
    const auto it = std::find(qois.begin(), qois.end(), name);
    if (it == qois.end()) throw ConfigError("QoI '" + name + "' not in campaign config");
    return static_cast<std::size_t>(it - qois.begin());
}

void CampaignConfig::validate() const {
    if (space.dim() == 0) throw ConfigError("config key 'space': needs at least one parameter");
    if (models.empty()) throw ConfigError("config key 'models': needs at least one model");
    for (const ModelSpec& m : models) {
        if (!(m.cost > 0.0)) throw ConfigError("config key 'models." + m.id + ".cost': must be positive");
    }
    if (qois.empty()) throw ConfigError("config key 'qois': needs at least one QoI");
    const bool any_analytic =
        std::any_of(models.begin(), models.end(),
                    [](const ModelSpec& m) { return m.kind == ModelKind::analytic; });
    for (const std::string& q : qois) {
        const bool hemo_qoi = q == "psys" || q == "pp" || q == "drmax";
        if (!hemo_qoi && q != "value") throw ConfigError("config key 'qois': unknown QoI '" + q + "'");
        if (any_analytic && q != "value") {
            throw ConfigError("config key 'qois': analytic models expose only 'value'");
        }
    }
    if (n_pilot < 5) throw ConfigError("config key 'n_pilot': must be >= 5");
    hemo.validate();
}

std::string CampaignConfig::digest() const {
    json j;
    j["space"] = json::array();
    for (const Parameter& p : space.params()) {
        j["space"].push_back({{"name", p.name}, {"lo", p.lower}, {"hi", p.upper}});
    }
    j["models"] = json::array();
    for (const ModelSpec& m : models) {
        j["models"].push_back({{"id", m.id},
                               {"kind", to_string(m.kind)},
                               {"cost", m.cost},
                               {"analytic", static_cast<int>(m.analytic)}});
    }
    j["skip"] = skip;
    j["phi"] = phi;
    j["waveform"] = waveform_path;
    const HemoConfig& h = hemo;
    j["hemo"] = {h.L,     h.rho_f,    h.eta,  h.nu,    h.Rp,        h.Cwk,
                 h.Rd,    h.P_dia,    h.P_ref, h.zeta, h.cycles_1d, h.cycles_0d,
                 h.dt_1d, h.dt_0d,    h.nodes_1d};

    // FNV-1a over the canonical serialization.
    const std::string s = j.dump();
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << hash;
    return out.str();
}

namespace {

template <typename T>
T get_or(const json& j, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config key '" + key + "': wrong type");
    }
}

HemoConfig parse_hemo(const json& j) {
    HemoConfig h;
    h.L = get_or(j, "L", h.L);
    h.rho_f = get_or(j, "rho_f", h.rho_f);
    h.eta = get_or(j, "eta", h.eta);
    h.nu = get_or(j, "nu", h.nu);
    h.Rp = get_or(j, "Rp", h.Rp);
    h.Cwk = get_or(j, "Cwk", h.Cwk);
    h.Rd = get_or(j, "Rd", h.Rd);
    h.P_dia = get_or(j, "P_dia", h.P_dia);
    h.P_ref = get_or(j, "P_ref", h.P_ref);
    h.zeta = get_or(j, "zeta", h.zeta);
    h.cycles_1d = get_or(j, "cycles_1d", h.cycles_1d);
    h.cycles_0d = get_or(j, "cycles_0d", h.cycles_0d);
    h.dt_1d = get_or(j, "dt_1d", h.dt_1d);
    h.dt_0d = get_or(j, "dt_0d", h.dt_0d);
    h.nodes_1d = get_or(j, "nodes_1d", h.nodes_1d);
    return h;
}

}  // namespace

CampaignConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }

    CampaignConfig cfg;
    if (!j.contains("space")) throw ConfigError("config key 'space': missing");
    std::vector<Parameter> params;
    for (const json& p : j.at("space")) {
        Parameter par;
        par.name = get_or<std::string>(p, "name", "");
        if (par.name.empty()) throw ConfigError("config key 'space[].name': missing");
        if (!p.contains("lower") || !p.contains("upper")) {
            throw ConfigError("config key 'space." + par.name + "': needs lower and upper");
        }
        par.lower = p.at("lower").get<double>();
        par.upper = p.at("upper").get<double>();
        par.unit = get_or<std::string>(p, "unit", "");
        params.push_back(par);
    }
    cfg.space = ParameterSpace(std::move(params));

    if (!j.contains("models")) throw ConfigError("config key 'models': missing");
    for (const json& m : j.at("models")) {
        ModelSpec spec;
        spec.id = get_or<std::string>(m, "id", "");
        spec.kind = model_kind_from_string(get_or<std::string>(m, "kind", ""));
        if (spec.id.empty()) spec.id = to_string(spec.kind);
        spec.cost = get_or(m, "cost", 1.0);
        if (m.contains("function")) {
            const std::string f = m.at("function").get<std::string>();
            if (f == "ishigami") spec.analytic = AnalyticKind::ishigami;
            else if (f == "linear_additive") spec.analytic = AnalyticKind::linear_additive;
            else if (f == "constant") spec.analytic = AnalyticKind::constant;
            else if (f == "g_function") spec.analytic = AnalyticKind::g_function;
            else throw ConfigError("config key 'models." + spec.id + ".function': unknown '" + f + "'");
        }
        cfg.models.push_back(spec);
    }

    cfg.qois = get_or(j, "qois", std::vector<std::string>{"psys", "pp", "drmax"});
    cfg.budgets = get_or(j, "budgets", std::vector<double>{});
    cfg.n_pilot = get_or<std::size_t>(j, "n_pilot", cfg.n_pilot);
    cfg.phi = get_or(j, "phi", cfg.phi);
    cfg.replicates = get_or<std::size_t>(j, "replicates", cfg.replicates);
    cfg.skip = get_or<std::uint64_t>(j, "skip", cfg.skip);
    cfg.pc_order = get_or<std::size_t>(j, "pc_order", cfg.pc_order);
    cfg.jobs = get_or<std::size_t>(j, "jobs", cfg.jobs);
    if (j.contains("hemo")) cfg.hemo = parse_hemo(j.at("hemo"));
    cfg.waveform_path = get_or<std::string>(j, "waveform", std::string());

    cfg.validate();
    return cfg;
}

CampaignConfig default_cca_config() {
    CampaignConfig cfg;
    cfg.space = ParameterSpace({{"r", 2.96e-3, 3.62e-3, "m"},
                                {"E", 3.96e5, 4.84e5, "Pa"},
                                {"h", 0.7065e-3, 0.8635e-3, "m"}});
    cfg.models = {{"1d", ModelKind::oned, 1.0},
                  {"0d", ModelKind::zerod, 0.3}};
    cfg.qois = {"psys", "pp", "drmax"};
    cfg.budgets = {500, 1000, 2000, 4000, 6000, 8000, 10000};
    return cfg;
}

}  // namespace mfsens
