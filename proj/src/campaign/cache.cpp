#include "mfsens/campaign/cache.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mfsens/errors.hpp"

namespace mfsens {

namespace fs = std::filesystem;

EvalCache::EvalCache(std::string dir, std::string digest, std::vector<std::string> model_ids,
                     std::size_t n_qoi)
    : dir_(std::move(dir)),
      digest_(std::move(digest)),
      model_ids_(std::move(model_ids)),
      n_qoi_(n_qoi),
      persistent_(true) {
    store_.resize(model_ids_.size());
    fs::create_directories(dir_);

    const fs::path digest_file = fs::path(dir_) / "config.digest";
    if (fs::exists(digest_file)) {
        std::ifstream in(digest_file);
        std::string stored;
        in >> stored;
        if (stored != digest_) {
            throw ConfigError("evaluation cache at '" + dir_ +
                              "' belongs to a different config (digest " + stored + " vs " +
                              digest_ + ")");
        }
    } else {
        std::ofstream out(digest_file);
        out << digest_ << "\n";
    }

    for (std::size_t k = 0; k < model_ids_.size(); ++k) {
        const fs::path file = fs::path(dir_) / ("evals_" + model_ids_[k] + ".csv");
        if (!fs::exists(file)) continue;
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string tok;
            if (!std::getline(ls, tok, ',')) continue;
            const std::uint64_t key = std::stoull(tok, nullptr, 16);
            std::vector<double> fields;
            while (std::getline(ls, tok, ',')) fields.push_back(std::stod(tok));
            if (fields.size() < n_qoi_) continue;
            std::vector<double> qoi(fields.end() - static_cast<long>(n_qoi_), fields.end());
            store_[k].emplace(key, std::move(qoi));
        }
    }
}

std::uint64_t EvalCache::point_key(const double* z, std::size_t d) {
    // FNV-1a over the raw bit patterns; the sequence is deterministic so
    // coordinates repeat bit-exactly across stages.
    std::uint64_t hash = 1469598103934665603ull;
    for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t bits;
        std::memcpy(&bits, &z[j], sizeof bits);
        for (int b = 0; b < 8; ++b) {
            hash ^= (bits >> (8 * b)) & 0xffu;
            hash *= 1099511628211ull;
        }
    }
    return hash;
}

const std::vector<double>* EvalCache::find(std::size_t model, std::uint64_t key) const {
    if (store_.empty()) return nullptr;
    const auto& m = store_[model];
    const auto it = m.find(key);
    return it == m.end() ? nullptr : &it->second;
}

void EvalCache::insert(std::size_t model, std::uint64_t key, const double* z, std::size_t d,
                       const std::vector<double>& qoi) {
    if (store_.empty()) store_.resize(model + 1);
    if (store_.size() <= model) store_.resize(model + 1);
    const auto [it, fresh] = store_[model].emplace(key, qoi);
    if (!fresh || !persistent_) return;

    const fs::path file = fs::path(dir_) / ("evals_" + model_ids_[model] + ".csv");
    std::ofstream out(file, std::ios::app);
    out.precision(17);
    out << std::hex << key << std::dec;
    for (std::size_t j = 0; j < d; ++j) out << "," << z[j];
    for (double q : qoi) out << "," << q;
    out << "\n";
}

std::size_t EvalCache::size(std::size_t model) const {
    return store_.empty() ? 0 : store_[model].size();
}

}  // namespace mfsens
