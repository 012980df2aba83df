#pragma once

#include "hyperheat/bochner.hpp"
#include "hyperheat/grid.hpp"
#include "hyperheat/semigroup.hpp"
#include "hyperheat/solver_config.hpp"

#include <span>
#include <vector>

namespace hyperheat {

/// Slab recursion for W_t u0 + int_0^t W_{t-tau} F(tau) dtau at t_1 < ... < t_M.
///
/// `forcing` holds F at tau = 0, t_1, ..., t_M (M + 1 entries). Between nodes F is
/// reconstructed piecewise linearly (order 2) or held at its left value (order 1),
/// and each mode is integrated exactly:
///   u(t_{i+1}) = e^z u(t_i) + h [(phi_1(z) - phi_2(z)) F_i + phi_2(z) F_{i+1}],  z = -h |xi|^{2 alpha}.
std::vector<SpectralField> duhamel_integrate(const SpectralField& initial, std::span<const SpectralField> forcing,
                                             std::span<const double> times, int order, const ModelParams& model);

/// T_{u0} u sampled at the trajectory's times, with F = |u|^{r-1} u (dealiased) and
/// F(0) = |u0|^{r-1} u0. Throws ParameterError if u0 and the trajectory use different grids.
Trajectory duhamel_apply(const RealField& u0, const Trajectory& trajectory, const SolverConfig& config,
                         const ModelParams& model);

/// Spectral variant used by the iterative solvers.
std::vector<SpectralField> duhamel_apply(const SpectralField& u0, std::span<const SpectralField> trajectory,
                                         std::span<const double> times, const SolverConfig& config,
                                         const ModelParams& model);

}  // namespace hyperheat
