#include "hyperheat/sample_fields.hpp"

#include "hyperheat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace hyperheat {

double uniform01(std::mt19937_64& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

RealField sample_function(const TorusGrid& grid, const std::function<double(std::span<const double>)>& fn) {
    RealField out(grid);
    std::vector<double> x(static_cast<std::size_t>(grid.dimension()));
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
        const auto idx = grid.unflatten(flat);
        for (std::size_t d = 0; d < idx.size(); ++d) x[d] = grid.coordinate(idx[d]);
        out[flat] = fn(x);
    }
    return out;
}

RealField cosine_mode(const TorusGrid& grid, std::span<const long> wavevector, double amplitude, double phase) {
    if (wavevector.size() != static_cast<std::size_t>(grid.dimension())) {
        throw ParameterError("cosine_mode: wavevector dimension mismatch");
    }
    const double scale = 2.0 * std::numbers::pi / grid.side_length();
    return sample_function(grid, [&](std::span<const double> x) {
        double arg = phase;
        for (std::size_t d = 0; d < x.size(); ++d) arg += scale * static_cast<double>(wavevector[d]) * x[d];
        return amplitude * std::cos(arg);
    });
}

namespace {

RealField from_random_spectrum(const TorusGrid& grid, std::uint64_t seed,
                               const std::function<double(double)>& magnitude, bool jitter) {
    std::mt19937_64 engine(seed);
    SpectralField spectrum(grid);
    const auto xi2 = grid.xi_squared();
    auto c = spectrum.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double phase = 2.0 * std::numbers::pi * uniform01(engine);
        const double factor = jitter ? 0.5 + uniform01(engine) : 1.0;
        c[k] = std::polar(magnitude(std::sqrt(xi2[k])) * factor, phase);
    }
    // Hermitian pairs: keep the lower flat index, mirror it.
    for (std::size_t k = 0; k < c.size(); ++k) {
        const std::size_t m = grid.mirror(k);
        if (m > k) c[m] = std::conj(c[k]);
        if (m == k) c[k] = Complex(c[k].real(), 0.0);
    }
    return inverse_transform(spectrum);
}

}  // namespace

RealField random_smooth_field(const TorusGrid& grid, std::uint64_t seed, double max_frequency, double decay,
                              double amplitude) {
    RealField f = from_random_spectrum(grid, seed, [&](double xi) {
        if (xi == 0.0 || xi > max_frequency) return 0.0;
        return std::pow(1.0 + xi * xi, -0.5 * decay);
    }, true);
    double peak = 0.0;
    for (double x : f.samples()) peak = std::max(peak, std::abs(x));
    if (peak > 0.0) f *= amplitude / peak;
    return f;
}

RealField power_law_field(const TorusGrid& grid, double exponent, std::uint64_t seed, double min_frequency) {
    RealField f = from_random_spectrum(grid, seed, [&](double xi) {
        if (xi == 0.0 || xi < min_frequency) return 0.0;
        return std::pow(xi, exponent);
    }, false);
    const double norm = lp_norm(f, 2.0);
    if (norm > 0.0) f *= 1.0 / norm;
    return f;
}

}  // namespace hyperheat
