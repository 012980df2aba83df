#pragma once

#include "hyperheat/littlewood_paley.hpp"
#include "hyperheat/semigroup.hpp"
#include "hyperheat/solver_config.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hyperheat::experiments {

/// Experiment identifiers; "sweep" is accepted as an alias of "admissibility-sweep".
const std::vector<std::string>& experiment_ids();
std::string canonical_id(const std::string& id);

struct GridSpec {
    std::size_t points = 64;
    double length = 2.0 * 3.14159265358979323846;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// One experiment run. The solution weight is t^{a/(2r)} with integrability v on (0, solver.T).
struct ExperimentConfig {
    std::string id = "solve";
    std::uint64_t seed = 1;
    std::string output = "out";
    ModelParams model;
    SpaceParams space;
    double a = 0.0;
    double v = 1.0;
    SolverConfig solver;
    GridSpec grid;
    std::map<std::string, std::string> params;  ///< experiment-specific knobs

    /// Throws ParameterError on any invalid sub-config or unknown id.
    void validate() const;

    double param(const std::string& key, double fallback) const;
    int param_int(const std::string& key, int fallback) const;
    std::string param_string(const std::string& key, const std::string& fallback) const;
    /// Comma-separated list of reals.
    std::vector<double> param_list(const std::string& key, const std::vector<double>& fallback) const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Parses the INI text; missing keys keep their defaults, unknown keys are rejected.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// INI text with every field present; parse_config(emit_config(c)) == c.
std::string emit_config(const ExperimentConfig& config);

/// Shortest round-trip decimal form ("inf" and "-inf" for infinities).
std::string format_double(double value);
double parse_double(const std::string& text);

}  // namespace hyperheat::experiments
