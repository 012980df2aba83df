#include "hyperheat/littlewood_paley.hpp"

#include "hyperheat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperheat {
namespace {

double smooth_step(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / x);
    const double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}

}  // namespace

std::string to_string(Family family) { return family == Family::B ? "B" : "F"; }

Family family_from_string(const std::string& text) {
    if (text == "B" || text == "b") return Family::B;
    if (text == "F" || text == "f") return Family::F;
    throw ParameterError("unknown space family '" + text + "' (expected B or F)");
}

void SpaceParams::validate() const {
    if (!(p >= 1.0) || !(q >= 1.0)) throw ParameterError("SpaceParams: p and q must be >= 1");
    if (family == Family::F && std::isinf(p)) throw ParameterError("SpaceParams: F-spaces require p < infinity");
    if (!std::isfinite(s) || !std::isfinite(s0)) throw ParameterError("SpaceParams: smoothness must be finite");
}

SpaceParams SpaceParams::with_smoothness(double smoothness) const {
    SpaceParams copy = *this;
    copy.s = smoothness;
    return copy;
}

double cutoff_profile(double radius) {
    if (radius <= 1.0) return 1.0;
    if (radius >= 1.5) return 0.0;
    return smooth_step((1.5 - radius) / 0.5);
}

DyadicDecomposition::DyadicDecomposition(TorusGrid grid, int max_index, std::vector<std::vector<double>> tables)
    : grid_(std::move(grid)), max_index_(max_index), tables_(std::move(tables)) {}

std::span<const double> DyadicDecomposition::cutoff(int j) const {
    if (j < 0 || j > max_index_) throw ParameterError("DyadicDecomposition: block index out of range");
    return tables_[static_cast<std::size_t>(j)];
}

bool DyadicDecomposition::block_is_empty(int j) const {
    const auto t = cutoff(j);
    return std::all_of(t.begin(), t.end(), [](double x) { return x == 0.0; });
}

DyadicDecomposition build_decomposition(const TorusGrid& grid) {
    const double top = grid.max_frequency();
    if (top < 2.0) throw ParameterError("build_decomposition: grid too coarse to host block j = 1 (max|xi| < 2)");
    int J = 0;
    while (std::ldexp(1.0, J) < top) ++J;

    const auto xi2 = grid.xi_squared();
    std::vector<std::vector<double>> tables(static_cast<std::size_t>(J) + 1, std::vector<double>(grid.size()));
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double radius = std::sqrt(xi2[k]);
        double previous = cutoff_profile(radius);
        tables[0][k] = previous;
        for (int j = 1; j <= J; ++j) {
            const double current = cutoff_profile(std::ldexp(radius, -j));
            tables[static_cast<std::size_t>(j)][k] = current - previous;
            previous = current;
        }
    }
    return DyadicDecomposition(grid, J, std::move(tables));
}

namespace {

// Returns false when phi_j * f^ vanishes identically (no transform needed).
bool block_coefficients(const SpectralField& f, int j, const DyadicDecomposition& d, SpectralField& out) {
    const auto phi = d.cutoff(j);
    const auto c = f.coefficients();
    auto o = out.coefficients();
    bool nonzero = false;
    for (std::size_t k = 0; k < c.size(); ++k) {
        o[k] = phi[k] * c[k];
        nonzero = nonzero || o[k] != Complex{};
    }
    return nonzero;
}

void require_grid(const SpectralField& f, const DyadicDecomposition& d) {
    if (!(f.grid() == d.grid())) throw ParameterError("field and decomposition live on different grids");
}

}  // namespace

RealField block(const SpectralField& f, int j, const DyadicDecomposition& decomposition) {
    require_grid(f, decomposition);
    if (j < 0 || j > decomposition.max_index()) throw ParameterError("block: index out of range");
    SpectralField piece(f.grid());
    if (!block_coefficients(f, j, decomposition, piece)) return RealField(f.grid());
    return inverse_transform(piece);
}

std::vector<double> block_norms(const SpectralField& f, double p, const DyadicDecomposition& decomposition) {
    require_grid(f, decomposition);
    std::vector<double> norms(static_cast<std::size_t>(decomposition.max_index()) + 1, 0.0);
    SpectralField piece(f.grid());
    for (int j = 0; j <= decomposition.max_index(); ++j) {
        if (!block_coefficients(f, j, decomposition, piece)) continue;
        norms[static_cast<std::size_t>(j)] = lp_norm(inverse_transform(piece), p);
    }
    return norms;
}

double a_norm(const SpectralField& f, const SpaceParams& space, const DyadicDecomposition& decomposition) {
    space.validate();
    require_grid(f, decomposition);
    const int J = decomposition.max_index();
    const bool q_inf = std::isinf(space.q);

    if (space.family == Family::B) {
        const auto norms = block_norms(f, space.p, decomposition);
        double acc = 0.0;
        if (q_inf) {
            for (int j = 0; j <= J; ++j) acc = std::max(acc, std::exp2(j * space.s) * norms[static_cast<std::size_t>(j)]);
            return acc;
        }
        for (int j = 0; j <= J; ++j) {
            acc += std::pow(std::exp2(j * space.s) * norms[static_cast<std::size_t>(j)], space.q);
        }
        return std::pow(acc, 1.0 / space.q);
    }

    // F-family: pointwise l_q over blocks, then L_p in space.
    RealField envelope(f.grid());
    auto env = envelope.samples();
    SpectralField piece(f.grid());
    for (int j = 0; j <= J; ++j) {
        if (!block_coefficients(f, j, decomposition, piece)) continue;
        const RealField b = inverse_transform(piece);
        const double w = std::exp2(j * space.s);
        const auto bs = b.samples();
        for (std::size_t i = 0; i < env.size(); ++i) {
            const double v = w * std::abs(bs[i]);
            env[i] = q_inf ? std::max(env[i], v) : env[i] + std::pow(v, space.q);
        }
    }
    if (!q_inf) {
        for (double& e : env) e = std::pow(e, 1.0 / space.q);
    }
    return lp_norm(envelope, space.p);
}

double a_norm(const RealField& f, const SpaceParams& space, const DyadicDecomposition& decomposition) {
    return a_norm(forward_transform(f), space, decomposition);
}

PowerMapProbe power_map_probe(const RealField& f, double r, const SpaceParams& space,
                              const DyadicDecomposition& decomposition) {
    space.validate();
    if (!(r > 1.0)) throw ParameterError("power_map_probe: r must be > 1");
    if (space.family == Family::F && space.p == 1.0 && space.s == 1.0) {
        throw ParameterError("power_map_probe: F-space corner p = 1, s = 1 is excluded");
    }
    RealField mapped = f;
    for (double& x : mapped.samples()) x = std::pow(std::abs(x), r - 1.0) * x;

    const double base = a_norm(f, space, decomposition);
    PowerMapProbe probe;
    const double n_over_p = std::isinf(space.p) ? 0.0 : f.grid().dimension() / space.p;
    probe.within_hypothesis = n_over_p < space.s && space.s < r;
    probe.ratio = base > 0.0 ? a_norm(mapped, space, decomposition) / std::pow(base, r)
                             : std::numeric_limits<double>::quiet_NaN();
    return probe;
}

}  // namespace hyperheat
