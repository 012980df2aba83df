#pragma once

#include "hyperheat/bochner.hpp"
#include "hyperheat/grid.hpp"
#include "hyperheat/littlewood_paley.hpp"
#include "hyperheat/semigroup.hpp"

#include <utility>
#include <vector>

namespace hyperheat {

/// max over interior samples of ||d_t u + (-Laplace)^alpha u - |u|^{r-1} u||_2 / ||u||_2.
/// d_t uses the three-point nonuniform centered difference. Needs at least three samples.
double pde_residual(const Trajectory& trajectory, const ModelParams& model, double dealias_factor = 1.5,
                    bool include_nonlinearity = true);

/// (t_i, ||u(t_i) - u0 | A^{s0}_{p,q}||) for every sample.
std::vector<std::pair<double, double>> strong_convergence_check(const Trajectory& trajectory, const RealField& u0,
                                                                const SpaceParams& space);

/// max_x | |u|^{r-1}u - |v|^{r-1}v - r (u - v) int_0^1 |t u + (1-t) v|^{r-1} dt |,
/// the t-integral by 64-point Gauss-Legendre split at the sign change of t u + (1-t) v.
double contraction_identity_check(const RealField& u, const RealField& v, double r);

/// Scalar version of the identity defect at one point.
double contraction_identity_defect(double u, double v, double r);

}  // namespace hyperheat
