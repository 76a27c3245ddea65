#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace mfsens {

// Append-only store of model evaluations keyed by (model id, exact input
// point). Expensive solves are shared between the pilot, MFMC, MC, and PC
// stages, and a resumed campaign never re-runs a (model, point) pair.
// Records live under <dir>/evals_<model>.csv; the directory is bound to one
// config digest.
class EvalCache {
public:
    // In-memory only.
    EvalCache() = default;
    // Backed by files under dir; loads any existing records.
    EvalCache(std::string dir, std::string digest, std::vector<std::string> model_ids,
              std::size_t n_qoi);

    // Exact-bits key of an input point.
    static std::uint64_t point_key(const double* z, std::size_t d);

    const std::vector<double>* find(std::size_t model, std::uint64_t key) const;
    void insert(std::size_t model, std::uint64_t key, const double* z, std::size_t d,
                const std::vector<double>& qoi);

    std::size_t size(std::size_t model) const;

private:
    void open_files();

    std::string dir_;
    std::string digest_;
    std::vector<std::string> model_ids_;
    std::size_t n_qoi_ = 0;
    bool persistent_ = false;
    std::vector<std::unordered_map<std::uint64_t, std::vector<double>>> store_;
};

}  // namespace mfsens
