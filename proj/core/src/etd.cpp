#include "hyperheat/etd.hpp"

#include "hyperheat/errors.hpp"
#include "hyperheat/nonlinearity.hpp"
#include "hyperheat/phi_functions.hpp"

#include <cmath>

namespace hyperheat {

Trajectory etd_oracle(const RealField& u0, const SolverConfig& config, const ModelParams& model,
                      bool include_nonlinearity) {
    config.validate();
    model.validate();
    if (!u0.all_finite()) throw ParameterError("etd_oracle: initial data not finite");
    const TorusGrid& grid = u0.grid();
    const auto times = make_time_grid(config);
    const auto symbol = dissipation_symbol(grid, model.alpha);
    const double limit = 1e3 * lp_norm(u0, 2.0);

    auto forcing = [&](const SpectralField& u) {
        return include_nonlinearity ? nonlinearity(u, model.r, config.dealias_factor) : SpectralField(grid);
    };

    SpectralField u = forward_transform(u0);
    std::vector<RealField> fields;
    fields.reserve(times.size());
    double previous = 0.0;
    for (std::size_t step = 0; step < times.size(); ++step) {
        const double h = times[step] - previous;
        const SpectralField nu = forcing(u);
        SpectralField stage(grid);
        auto sc = stage.coefficients();
        const auto uc = u.coefficients();
        const auto nc = nu.coefficients();
        for (std::size_t k = 0; k < sc.size(); ++k) {
            const double z = -h * symbol[k];
            sc[k] = std::exp(z) * uc[k] + h * phi1(z) * nc[k];
        }
        stage.symmetrize();
        if (include_nonlinearity) {
            const SpectralField na = forcing(stage);
            const auto ac = na.coefficients();
            for (std::size_t k = 0; k < sc.size(); ++k) {
                sc[k] += h * phi2(-h * symbol[k]) * (ac[k] - nc[k]);
            }
            stage.symmetrize();
        }
        u = std::move(stage);
        const double norm = l2_norm(u);
        if (!std::isfinite(norm)) throw InstabilityError("etd_oracle: non-finite state", step, times[step]);
        if (norm > limit && limit > 0.0) throw InstabilityError("etd_oracle: growth beyond 1e3 x initial", step, times[step]);
        fields.push_back(inverse_transform(u));
        previous = times[step];
    }
    return Trajectory(times, std::move(fields));
}

}  // namespace hyperheat
