#include "hyperheat/diagnostics.hpp"

#include "hyperheat/errors.hpp"
#include "hyperheat/nonlinearity.hpp"
#include "hyperheat/parallel.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>

namespace hyperheat {

double pde_residual(const Trajectory& trajectory, const ModelParams& model, double dealias_factor,
                    bool include_nonlinearity) {
    model.validate();
    const std::size_t m = trajectory.size();
    if (m < 3) throw ParameterError("pde_residual: need at least three samples");
    const TorusGrid& grid = trajectory.grid();
    const auto symbol = dissipation_symbol(grid, model.alpha);
    std::vector<SpectralField> hats;
    hats.reserve(m);
    for (const auto& f : trajectory.fields()) hats.push_back(forward_transform(f));

    std::vector<double> residuals(m, 0.0);
    parallel_for(m - 2, [&](std::size_t j) {
        const std::size_t i = j + 1;
        const double h1 = trajectory.time(i) - trajectory.time(i - 1);
        const double h2 = trajectory.time(i + 1) - trajectory.time(i);
        const double wl = -h2 / (h1 * (h1 + h2));
        const double wc = (h2 - h1) / (h1 * h2);
        const double wr = h1 / (h2 * (h1 + h2));
        SpectralField res(grid);
        auto rc = res.coefficients();
        const auto l = hats[i - 1].coefficients();
        const auto c = hats[i].coefficients();
        const auto r = hats[i + 1].coefficients();
        for (std::size_t k = 0; k < rc.size(); ++k) rc[k] = wl * l[k] + wc * c[k] + wr * r[k] + symbol[k] * c[k];
        if (include_nonlinearity) res -= nonlinearity(hats[i], model.r, dealias_factor);
        const double scale = hats[i].l2();
        const double value = res.l2();
        residuals[i] = scale > 0.0 ? value / scale : value;
    });
    return *std::max_element(residuals.begin(), residuals.end());
}

std::vector<std::pair<double, double>> strong_convergence_check(const Trajectory& trajectory, const RealField& u0,
                                                                const SpaceParams& space) {
    if (!(u0.grid() == trajectory.grid())) throw ParameterError("strong_convergence_check: mismatched grids");
    const auto decomposition = build_decomposition(u0.grid());
    const SpaceParams initial = space.with_smoothness(space.s0);
    std::vector<std::pair<double, double>> out(trajectory.size());
    parallel_for(trajectory.size(), [&](std::size_t i) {
        out[i] = {trajectory.time(i), a_norm(trajectory.field(i) - u0, initial, decomposition)};
    });
    return out;
}

double contraction_identity_defect(double u, double v, double r) {
    using Rule = boost::math::quadrature::gauss<double, 64>;
    const double lhs = signed_power(u, r) - signed_power(v, r);
    auto integrand = [&](double t) { return std::pow(std::abs(t * u + (1.0 - t) * v), r - 1.0); };
    double integral = 0.0;
    if (u * v < 0.0) {
        const double root = v / (v - u);
        integral = Rule::integrate(integrand, 0.0, root) + Rule::integrate(integrand, root, 1.0);
    } else {
        integral = Rule::integrate(integrand, 0.0, 1.0);
    }
    return std::abs(lhs - r * (u - v) * integral);
}

double contraction_identity_check(const RealField& u, const RealField& v, double r) {
    if (!(u.grid() == v.grid())) throw ParameterError("contraction_identity_check: mismatched grids");
    if (!(r >= 1.0)) throw ParameterError("contraction_identity_check: r must be at least 1");
    std::vector<double> defects(u.size());
    parallel_for(u.size(), [&](std::size_t i) { defects[i] = contraction_identity_defect(u[i], v[i], r); });
    return defects.empty() ? 0.0 : *std::max_element(defects.begin(), defects.end());
}

}  // namespace hyperheat
