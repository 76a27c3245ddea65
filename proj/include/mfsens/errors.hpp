#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfsens {

// Invalid arguments, mismatched sizes, out-of-domain inputs.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A forward solver produced NaN/Inf, violated CFL, or failed to converge.
// Carries the failing time step and (for spatial solvers) the node index.
class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, std::size_t step, long node = -1)
        : std::runtime_error(what + " (step " + std::to_string(step) +
                             (node >= 0 ? ", node " + std::to_string(node) : "") + ")"),
          step_(step),
          node_(node) {}

    std::size_t step() const { return step_; }
    long node() const { return node_; }

private:
    std::size_t step_;
    long node_;
};

// Pilot statistics do not admit the closed-form allocation; the message
// names the offending level(s).
class AllocationError : public std::runtime_error {
public:
    explicit AllocationError(const std::string& what) : std::runtime_error(what) {}
};

// Campaign configuration file problems; names the offending key.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mfsens
