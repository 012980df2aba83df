#include "hyperheat/picard.hpp"

#include "hyperheat/admissibility.hpp"
#include "hyperheat/duhamel.hpp"
#include "hyperheat/errors.hpp"
#include "hyperheat/parallel.hpp"

#include <cmath>
#include <limits>

namespace hyperheat {

double solution_space_norm(const std::vector<SpectralField>& trajectory, std::span<const double> times,
                           const TimeWeight& weight, const SpaceParams& space, const DyadicDecomposition& decomposition,
                           double r) {
    std::vector<double> norms(trajectory.size());
    parallel_for(trajectory.size(), [&](std::size_t i) { norms[i] = a_norm(trajectory[i], space, decomposition); });
    return weighted_time_norm(times, norms, weight.b, weight.T, 2.0 * r * weight.v).value;
}

namespace {

std::vector<SpectralField> difference(const std::vector<SpectralField>& a, const std::vector<SpectralField>& b) {
    std::vector<SpectralField> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

Trajectory to_trajectory(const std::vector<SpectralField>& fields, const std::vector<double>& times) {
    std::vector<RealField> real;
    real.reserve(fields.size());
    for (const auto& f : fields) real.push_back(inverse_transform(f));
    return Trajectory(times, std::move(real));
}

}  // namespace

PicardReport picard_solve(const RealField& u0, const SolverConfig& config, const ModelParams& model,
                          const TimeWeight& weight, const SpaceParams& space) {
    config.validate();
    model.validate();
    weight.validate();
    space.validate();
    if (u0.grid().dimension() != model.n) throw ParameterError("picard_solve: grid dimension differs from n");
    if (std::abs(weight.T - config.T) > 1e-12 * config.T) {
        throw ParameterError("picard_solve: weight horizon differs from solver horizon");
    }
    const double a = 2.0 * model.r * weight.b;
    const auto adm = admissibility(a, weight.v, space.s, space.s0, space.p, model);
    if (!adm.admissible) throw ParameterError("picard_solve: (a, v, s, s0) is not admissible");
    if (!(space.s > model.n / space.p)) throw ParameterError("picard_solve: need s > n/p");
    if (!u0.all_finite()) throw ParameterError("picard_solve: initial data not finite");

    const auto times = make_time_grid(config);
    const auto decomposition = build_decomposition(u0.grid());
    const SpectralField u0_hat = forward_transform(u0);

    std::vector<SpectralField> current;
    current.reserve(times.size());
    for (double t : times) current.push_back(apply_semigroup(u0_hat, t, model));

    PicardReport report;
    report.initial_scale = solution_space_norm(current, times, weight, space, decomposition, model.r);
    int growth_streak = 0;
    for (int k = 1; k <= config.picard_max_iter; ++k) {
        auto next = duhamel_apply(u0_hat, current, times, config, model);
        std::vector<double> norms(next.size());
        std::vector<double> diff_norms(next.size());
        const auto diff = difference(next, current);
        parallel_for(next.size(), [&](std::size_t i) {
            norms[i] = a_norm(next[i], space, decomposition);
            diff_norms[i] = a_norm(diff[i], space, decomposition);
        });
        const double exponent = 2.0 * model.r * weight.v;
        const auto scale = weighted_time_norm(times, norms, weight.b, weight.T, exponent);
        const double dist_abs = weighted_time_norm(times, diff_norms, weight.b, weight.T, exponent).value;
        double dist = 0.0;
        if (scale.value > 0.0) dist = dist_abs / scale.value;
        else if (dist_abs > 0.0) dist = std::numeric_limits<double>::infinity();

        if (!report.distances.empty()) {
            const double prev = report.distances.back();
            report.contraction_factors.push_back(prev > 0.0 ? dist / prev : 0.0);
            growth_streak = dist > prev ? growth_streak + 1 : 0;
        }
        report.distances.push_back(dist);
        report.iterations = k;
        report.scale = scale.value;
        report.coverage_warning = scale.coverage_warning;
        current = std::move(next);

        const bool finite = std::isfinite(scale.value) && std::isfinite(dist);
        const bool exploded = report.initial_scale > 0.0 && scale.value > 1e3 * report.initial_scale;
        if (!finite || exploded || growth_streak >= 3) {
            report.note = !finite     ? "non-finite iterate"
                          : exploded  ? "iterate norm above 1e3 x initial"
                                      : "distance grew 3 times in a row";
            if (finite) report.trajectory = to_trajectory(current, times);
            const std::string message = "picard_solve: blow-up suspected (" + report.note + ")";
            throw BlowupSuspected(message, std::move(report));
        }
        if (dist <= config.picard_tol) {
            report.converged = true;
            break;
        }
    }
    if (!report.converged) report.note = "iteration limit reached";
    report.trajectory = to_trajectory(current, times);
    return report;
}

}  // namespace hyperheat
