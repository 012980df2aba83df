#pragma once

#include "hyperheat/grid.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>

namespace hyperheat {

/// Portable uniform [0, 1) from a 64-bit engine (std distributions are
/// implementation-defined, which would break seed reproducibility across platforms).
double uniform01(std::mt19937_64& engine);

/// Samples fn(x) at every grid point; x has one coordinate per direction.
RealField sample_function(const TorusGrid& grid, const std::function<double(std::span<const double>)>& fn);

/// amplitude * cos(xi_k . x + phase) for the lattice wavevector k (integer components).
RealField cosine_mode(const TorusGrid& grid, std::span<const long> wavevector, double amplitude = 1.0,
                      double phase = 0.0);

/// Random real field with coefficients supported on 0 < |xi| <= max_frequency and
/// magnitudes ~ (1 + |xi|^2)^{-decay/2}, random phases; scaled to sup-norm `amplitude`.
RealField random_smooth_field(const TorusGrid& grid, std::uint64_t seed, double max_frequency, double decay = 2.0,
                              double amplitude = 1.0);

/// Random-phase field with |c(xi)| = |xi|^{exponent} for min_frequency <= |xi|, zero mean.
/// Scaled to unit L_2 norm.
RealField power_law_field(const TorusGrid& grid, double exponent, std::uint64_t seed, double min_frequency = 1.0);

}  // namespace hyperheat
