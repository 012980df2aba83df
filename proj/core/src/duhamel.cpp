#include "hyperheat/duhamel.hpp"

#include "hyperheat/errors.hpp"
#include "hyperheat/nonlinearity.hpp"
#include "hyperheat/parallel.hpp"
#include "hyperheat/phi_functions.hpp"

#include <cmath>

namespace hyperheat {

std::vector<SpectralField> duhamel_integrate(const SpectralField& initial, std::span<const SpectralField> forcing,
                                             std::span<const double> times, int order, const ModelParams& model) {
    model.validate();
    if (forcing.size() != times.size() + 1) {
        throw ParameterError("duhamel_integrate: need forcing at tau = 0 and at every sample time");
    }
    if (order != 1 && order != 2) throw ParameterError("duhamel_integrate: order must be 1 or 2");
    const TorusGrid& grid = initial.grid();
    for (const auto& f : forcing) {
        if (!(f.grid() == grid)) throw ParameterError("duhamel_integrate: forcing lives on a different grid");
    }
    const auto symbol = dissipation_symbol(grid, model.alpha);

    std::vector<SpectralField> out;
    out.reserve(times.size());
    SpectralField current = initial;
    double previous_time = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double h = times[i] - previous_time;
        if (!(h > 0.0)) throw ParameterError("duhamel_integrate: times must be strictly increasing from 0");
        const auto left = forcing[i].coefficients();
        const auto right = forcing[i + 1].coefficients();
        auto c = current.coefficients();
        for (std::size_t k = 0; k < c.size(); ++k) {
            const double z = -h * symbol[k];
            const double p1 = phi1(z);
            if (order == 1) {
                c[k] = std::exp(z) * c[k] + h * p1 * left[k];
            } else {
                const double p2 = phi2(z);
                c[k] = std::exp(z) * c[k] + h * ((p1 - p2) * left[k] + p2 * right[k]);
            }
        }
        current.symmetrize();
        out.push_back(current);
        previous_time = times[i];
    }
    return out;
}

std::vector<SpectralField> duhamel_apply(const SpectralField& u0, std::span<const SpectralField> trajectory,
                                         std::span<const double> times, const SolverConfig& config,
                                         const ModelParams& model) {
    if (trajectory.size() != times.size()) throw ParameterError("duhamel_apply: one field per time required");
    std::vector<SpectralField> forcing(times.size() + 1, SpectralField(u0.grid()));
    parallel_for(times.size() + 1, [&](std::size_t i) {
        const SpectralField& source = i == 0 ? u0 : trajectory[i - 1];
        if (!(source.grid() == u0.grid())) throw ParameterError("duhamel_apply: mismatched grids");
        forcing[i] = nonlinearity(source, model.r, config.dealias_factor);
    });
    return duhamel_integrate(u0, forcing, times, config.quadrature_order, model);
}

Trajectory duhamel_apply(const RealField& u0, const Trajectory& trajectory, const SolverConfig& config,
                         const ModelParams& model) {
    config.validate();
    if (!(u0.grid() == trajectory.grid())) throw ParameterError("duhamel_apply: u0 and trajectory grids differ");
    std::vector<SpectralField> spectral;
    spectral.reserve(trajectory.size());
    for (const auto& f : trajectory.fields()) spectral.push_back(forward_transform(f));
    const auto result = duhamel_apply(forward_transform(u0), spectral, trajectory.times(), config, model);
    std::vector<RealField> fields;
    fields.reserve(result.size());
    for (const auto& f : result) fields.push_back(inverse_transform(f));
    return Trajectory(std::vector<double>(trajectory.times().begin(), trajectory.times().end()), std::move(fields));
}

}  // namespace hyperheat
