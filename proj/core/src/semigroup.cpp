#include "hyperheat/semigroup.hpp"

#include "hyperheat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyperheat {
namespace {

double integer_power(double base, unsigned long exponent) {
    double result = 1.0;
    while (exponent > 0) {
        if (exponent & 1UL) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LineFit fit;
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

}  // namespace

void ModelParams::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("ModelParams: alpha must be positive");
    if (!(r >= 2.0) || !std::isfinite(r)) throw ParameterError("ModelParams: r must be >= 2");
    if (n < 1) throw ParameterError("ModelParams: n must be >= 1");
}

bool ModelParams::alpha_is_integer() const noexcept { return alpha == std::floor(alpha); }

double ModelParams::critical_smoothness(double p) const {
    const double n_over_p = std::isinf(p) ? 0.0 : n / p;
    return n_over_p - 2.0 * alpha / (r - 1.0);
}

std::vector<double> dissipation_symbol(const TorusGrid& grid, double alpha) {
    const auto xi2 = grid.xi_squared();
    std::vector<double> symbol(xi2.size());
    if (alpha == std::floor(alpha) && alpha >= 1.0 && alpha < 64.0) {
        const auto e = static_cast<unsigned long>(alpha);
        for (std::size_t k = 0; k < xi2.size(); ++k) symbol[k] = integer_power(xi2[k], e);
    } else {
        for (std::size_t k = 0; k < xi2.size(); ++k) symbol[k] = std::pow(xi2[k], alpha);
    }
    return symbol;
}

SpectralField apply_semigroup(const SpectralField& f, double t, const ModelParams& model) {
    if (!(t >= 0.0)) throw ParameterError("apply_semigroup: t must be >= 0");
    model.validate();
    if (t == 0.0) return f;
    const auto symbol = dissipation_symbol(f.grid(), model.alpha);
    SpectralField out = f;
    auto c = out.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] *= std::exp(-t * symbol[k]);
    out.symmetrize();
    return out;
}

RealField apply_semigroup(const RealField& f, double t, const ModelParams& model) {
    return inverse_transform(apply_semigroup(forward_transform(f), t, model));
}

RealField synthesize_kernel(double t, const TorusGrid& grid, const ModelParams& model) {
    if (!(t > 0.0)) throw ParameterError("synthesize_kernel: t must be > 0");
    model.validate();
    const auto symbol = dissipation_symbol(grid, model.alpha);
    // Unitary inverse carries N_tot^{-1/2}; the kernel needs V^{-1} per mode.
    const double scale = std::sqrt(static_cast<double>(grid.size())) / grid.volume();
    SpectralField spectrum(grid);
    auto c = spectrum.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = scale * std::exp(-t * symbol[k]);
    return inverse_transform(spectrum);
}

double semigroup_property_check(const SpectralField& f, double t, double s, const ModelParams& model) {
    if (!(t >= 0.0) || !(s >= 0.0)) throw ParameterError("semigroup_property_check: times must be >= 0");
    const double base = f.l2();
    if (base == 0.0) return 0.0;
    const SpectralField joint = apply_semigroup(f, t + s, model);
    const SpectralField split = apply_semigroup(apply_semigroup(f, s, model), t, model);
    return (joint - split).l2() / base;
}

std::vector<double> log_spaced(double t_min, double t_max, std::size_t count) {
    if (!(t_min > 0.0) || !(t_max >= t_min) || count == 0) throw ParameterError("log_spaced: bad range");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = t_min;
        return out;
    }
    const double a = std::log(t_min);
    const double b = std::log(t_max);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    out.front() = t_min;
    out.back() = t_max;
    return out;
}

SmoothingReport smoothing_rate(const RealField& omega, const SpaceParams& space, double gain,
                               std::span<const double> times, const ModelParams& model) {
    space.validate();
    model.validate();
    if (!(gain >= 0.0)) throw ParameterError("smoothing_rate: d must be >= 0");
    if (times.empty()) throw ParameterError("smoothing_rate: no sample times");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
            throw ParameterError("smoothing_rate: times must be positive and strictly increasing");
        }
    }

    const DyadicDecomposition decomposition = build_decomposition(omega.grid());
    const SpectralField spectrum = forward_transform(omega);
    const SpaceParams target = space.with_smoothness(space.s + gain);
    const double base = a_norm(spectrum, space, decomposition);
    if (!(base > 0.0)) throw ParameterError("smoothing_rate: omega has zero norm");

    SmoothingReport report;
    report.gain = gain;
    report.times.assign(times.begin(), times.end());

    const auto energy = block_norms(spectrum, 2.0, decomposition);
    const double total = std::accumulate(energy.begin(), energy.end(), 0.0);
    const auto alive = std::count_if(energy.begin(), energy.end(), [&](double e) { return e > 1e-12 * total; });
    if (alive <= 1) {
        report.degenerate = true;
        report.note = "bound saturated trivially";
    }

    std::vector<double> log_t;
    std::vector<double> log_norm;
    for (double t : times) {
        const double norm = a_norm(apply_semigroup(spectrum, t, model), target, decomposition);
        report.norms.push_back(norm);
        report.ratios.push_back(std::pow(t, gain / (2.0 * model.alpha)) * norm / base);
        if (t <= 1.0 && norm > 0.0) {
            log_t.push_back(std::log(t));
            log_norm.push_back(std::log(norm));
        }
    }
    for (std::size_t i = 1; i < report.norms.size(); ++i) {
        if (report.norms[i] > report.norms[i - 1] * (1.0 + 1e-12)) report.norms_nonincreasing = false;
    }
    if (log_t.size() >= 2) {
        const LineFit fit = least_squares(log_t, log_norm);
        report.slope = fit.slope;
        report.intercept = fit.intercept;
    }
    return report;
}

}  // namespace hyperheat
