#include "hyperheat/errors.hpp"
#include "hyperheat/solver_config.hpp"

#include <cmath>

namespace hyperheat {

std::string to_string(TimeGridKind kind) { return kind == TimeGridKind::geometric ? "geometric" : "uniform"; }

TimeGridKind time_grid_from_string(const std::string& text) {
    if (text == "geometric") return TimeGridKind::geometric;
    if (text == "uniform") return TimeGridKind::uniform;
    throw ParameterError("unknown time grid '" + text + "' (expected geometric or uniform)");
}

void SolverConfig::validate() const {
    if (!(T > 0.0) || !std::isfinite(T)) throw ParameterError("SolverConfig: T must be positive and finite");
    if (slabs < 4) throw ParameterError("SolverConfig: at least 4 slabs required");
    if (octaves < 0 || per_octave < 1) throw ParameterError("SolverConfig: bad geometric refinement");
    if (!(picard_tol > 0.0)) throw ParameterError("SolverConfig: picard_tol must be positive");
    if (picard_max_iter < 1) throw ParameterError("SolverConfig: picard_max_iter must be >= 1");
    if (!(dealias_factor >= 1.0)) throw ParameterError("SolverConfig: dealias_factor must be >= 1");
    if (quadrature_order != 1 && quadrature_order != 2) {
        throw ParameterError("SolverConfig: quadrature_order must be 1 or 2");
    }
}

std::vector<double> make_time_grid(const SolverConfig& config) {
    config.validate();
    const double T = config.T;
    std::vector<double> out;
    if (config.time_grid == TimeGridKind::uniform) {
        out.reserve(config.slabs);
        for (std::size_t i = 1; i <= config.slabs; ++i) {
            out.push_back(T * static_cast<double>(i) / static_cast<double>(config.slabs));
        }
        out.back() = T;
        return out;
    }

    const int levels = config.octaves * config.per_octave;
    std::vector<double> anchors;  // increasing
    anchors.reserve(static_cast<std::size_t>(levels) + 1);
    for (int j = levels; j >= 0; --j) {
        anchors.push_back(T * std::exp2(-static_cast<double>(j) / config.per_octave));
    }
    const double max_step = T / static_cast<double>(config.slabs);
    out.push_back(anchors.front());
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        const double lo = anchors[i];
        const double hi = anchors[i + 1];
        const auto pieces = static_cast<std::size_t>(std::ceil((hi - lo) / max_step * (1.0 - 1e-12)));
        for (std::size_t k = 1; k < pieces; ++k) {
            out.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(pieces));
        }
        out.push_back(hi);
    }
    out.back() = T;
    return out;
}

}  // namespace hyperheat
