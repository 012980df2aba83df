#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hyperheat {

enum class TimeGridKind { geometric, uniform };

std::string to_string(TimeGridKind kind);
TimeGridKind time_grid_from_string(const std::string& text);

struct SolverConfig {
    double T = 0.25;
    std::size_t slabs = 128;        ///< no slab longer than T / slabs
    int octaves = 12;               ///< geometric refinement reaches T * 2^-octaves
    int per_octave = 4;             ///< geometric points per halving of t
    TimeGridKind time_grid = TimeGridKind::geometric;
    double picard_tol = 1e-10;
    int picard_max_iter = 50;
    double dealias_factor = 1.5;
    int quadrature_order = 2;       ///< 1: piecewise-constant, 2: piecewise-linear in tau

    /// Throws ParameterError on T <= 0, slabs < 4, tol <= 0, order not in {1, 2}, ...
    void validate() const;

    friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// Slab endpoints t_1 < ... < t_M = T (t_0 = 0 is implicit).
///
/// geometric: the points T 2^{-j/per_octave}, j = 0..octaves*per_octave, with every gap
/// split uniformly so that no step exceeds T / slabs. Dyadic times T/2^m (m <= octaves)
/// are exact samples and the grid scales exactly with T.
/// uniform: t_i = i T / slabs.
std::vector<double> make_time_grid(const SolverConfig& config);

}  // namespace hyperheat
