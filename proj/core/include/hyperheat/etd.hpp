#pragma once

#include "hyperheat/bochner.hpp"
#include "hyperheat/grid.hpp"
#include "hyperheat/semigroup.hpp"
#include "hyperheat/solver_config.hpp"

namespace hyperheat {

/// Second-order exponential Runge-Kutta (ETD2RK) on make_time_grid(config):
///   a       = e^z u_n + h phi_1(z) N(u_n)
///   u_{n+1} = a + h phi_2(z) (N(a) - N(u_n)),   z = -h |xi|^{2 alpha}.
/// With include_nonlinearity = false the scheme reduces to the exact semigroup.
/// Throws InstabilityError on non-finite values or growth beyond 1e3 ||u0||_2.
Trajectory etd_oracle(const RealField& u0, const SolverConfig& config, const ModelParams& model,
                      bool include_nonlinearity = true);

}  // namespace hyperheat
