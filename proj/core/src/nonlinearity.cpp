#include "hyperheat/nonlinearity.hpp"

#include "hyperheat/errors.hpp"
#include "hyperheat/fft.hpp"

#include <cmath>

namespace hyperheat {
namespace {

// Visits every padded-lattice target of coarse flat index `flat`: a coarse
// Nyquist index maps to both -N/2 and +N/2 on the fine lattice.
template <class Visitor>
void for_each_target(const TorusGrid& grid, std::size_t fine_points, std::size_t flat, Visitor&& visit) {
    const int n = grid.dimension();
    const std::size_t N = grid.points_per_dim();
    std::size_t first[8] = {};
    std::size_t second[8] = {};
    bool split[8] = {};
    int splits = 0;
    std::size_t rest = flat;
    for (int d = n - 1; d >= 0; --d) {
        const std::size_t i = rest % N;
        rest /= N;
        const long k = grid.wavenumber(i);
        const auto fine_index = [&](long kk) {
            return static_cast<std::size_t>(kk >= 0 ? kk : kk + static_cast<long>(fine_points));
        };
        first[d] = fine_index(k);
        split[d] = (k == -static_cast<long>(N / 2)) && fine_points > N;
        second[d] = split[d] ? fine_index(-k) : first[d];
        splits += split[d] ? 1 : 0;
    }
    const double weight = std::ldexp(1.0, -splits);
    const std::size_t combos = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < combos; ++mask) {
        bool valid = true;
        std::size_t target = 0;
        for (int d = 0; d < n; ++d) {
            const bool pick_second = (mask >> d) & 1U;
            if (pick_second && !split[d]) {
                valid = false;
                break;
            }
            target = target * fine_points + (pick_second ? second[d] : first[d]);
        }
        if (valid) visit(target, weight);
    }
}

std::size_t cube(std::size_t points, int dimension) {
    std::size_t total = 1;
    for (int d = 0; d < dimension; ++d) total *= points;
    return total;
}

}  // namespace

double signed_power(double x, double r) {
    if (r == 3.0) return x * x * x;
    if (r == 2.0) return x * std::abs(x);
    return std::pow(std::abs(x), r - 1.0) * x;
}

std::size_t padded_points(std::size_t points, double dealias_factor) {
    if (!(dealias_factor >= 1.0)) throw ParameterError("padded_points: dealias factor must be >= 1");
    auto fine = static_cast<std::size_t>(std::ceil(static_cast<double>(points) * dealias_factor - 1e-9));
    if (fine % 2 != 0) ++fine;
    return fine;
}

std::vector<double> padded_samples(const SpectralField& f, double dealias_factor) {
    const TorusGrid& grid = f.grid();
    if (grid.dimension() > 8) throw ParameterError("padded_samples: at most 8 dimensions supported");
    const std::size_t fine_points = padded_points(grid.points_per_dim(), dealias_factor);
    const std::size_t fine_total = cube(fine_points, grid.dimension());
    std::vector<Complex> fine(fine_total);
    const auto c = f.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == Complex{}) continue;
        for_each_target(grid, fine_points, k, [&](std::size_t target, double w) { fine[target] += w * c[k]; });
    }
    fft::transform(fine, grid.dimension(), fine_points, fft::Direction::backward);
    const double scale = 1.0 / std::sqrt(static_cast<double>(grid.size()));
    std::vector<double> out(fine_total);
    for (std::size_t i = 0; i < fine_total; ++i) out[i] = fine[i].real() * scale;
    return out;
}

SpectralField truncate_to_band(const std::vector<double>& fine_samples, const TorusGrid& grid,
                               double dealias_factor) {
    const std::size_t fine_points = padded_points(grid.points_per_dim(), dealias_factor);
    const std::size_t fine_total = cube(fine_points, grid.dimension());
    if (fine_samples.size() != fine_total) throw ParameterError("truncate_to_band: sample count mismatch");
    std::vector<Complex> fine(fine_samples.begin(), fine_samples.end());
    fft::transform(fine, grid.dimension(), fine_points, fft::Direction::forward);
    const double scale = std::sqrt(static_cast<double>(grid.size())) / static_cast<double>(fine_total);
    SpectralField out(grid);
    auto c = out.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        Complex sum{};
        for_each_target(grid, fine_points, k, [&](std::size_t target, double) { sum += fine[target]; });
        c[k] = scale * sum;
    }
    out.symmetrize();
    return out;
}

SpectralField nonlinearity(const SpectralField& u, double r, double dealias_factor) {
    if (dealias_factor == 1.0) {
        RealField values = inverse_transform(u);
        for (double& x : values.samples()) x = signed_power(x, r);
        return forward_transform(values);
    }
    std::vector<double> fine = padded_samples(u, dealias_factor);
    for (double& x : fine) x = signed_power(x, r);
    return truncate_to_band(fine, u.grid(), dealias_factor);
}

RealField nonlinearity(const RealField& u, double r, double dealias_factor) {
    return inverse_transform(nonlinearity(forward_transform(u), r, dealias_factor));
}

}  // namespace hyperheat
