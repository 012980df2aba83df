#pragma once

#include "hyperheat/bochner.hpp"
#include "hyperheat/grid.hpp"
#include "hyperheat/littlewood_paley.hpp"
#include "hyperheat/semigroup.hpp"
#include "hyperheat/solver_config.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperheat {

struct PicardReport {
    int iterations = 0;
    std::vector<double> distances;            ///< X(u^{k+1} - u^k) / X(u^{k+1})
    std::vector<double> contraction_factors;  ///< d_{k+1} / d_k
    bool converged = false;
    double scale = 0.0;                       ///< X(final iterate)
    double initial_scale = 0.0;               ///< X(W_t u0)
    bool coverage_warning = false;
    std::optional<Trajectory> trajectory;     ///< last iterate
    std::string note;
};

/// Picard iteration diverged: the distance grew three times in a row or the
/// iterate norm exceeded 1e3 times that of W_t u0. Carries the partial report.
class BlowupSuspected : public std::runtime_error {
public:
    BlowupSuspected(const std::string& what, PicardReport report)
        : std::runtime_error(what), report_(std::move(report)) {}

    const PicardReport& report() const noexcept { return report_; }

private:
    PicardReport report_;
};

/// The norm of L_{2rv}((0,T), b, A^s_{p,q}) used to measure Picard distances.
double solution_space_norm(const std::vector<SpectralField>& trajectory, std::span<const double> times,
                           const TimeWeight& weight, const SpaceParams& space, const DyadicDecomposition& decomposition,
                           double r);

/// Fixed point of T_{u0} on make_time_grid(config), starting from t -> W_t u0.
///
/// The pair (a, v) = (2 r weight.b, weight.v) together with (space.s, space.s0, space.p)
/// must be admissible, space.s must exceed n/p and weight.T must equal config.T;
/// otherwise ParameterError. Stops when the relative distance drops to picard_tol.
PicardReport picard_solve(const RealField& u0, const SolverConfig& config, const ModelParams& model,
                          const TimeWeight& weight, const SpaceParams& space);

}  // namespace hyperheat
