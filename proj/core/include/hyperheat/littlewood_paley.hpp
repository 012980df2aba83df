#pragma once

#include "hyperheat/grid.hpp"

#include <span>
#include <string>
#include <vector>

namespace hyperheat {

enum class Family { B, F };

std::string to_string(Family family);
Family family_from_string(const std::string& text);

/// Identifies A^s_{p,q}, A in {B, F}; `s0` is the smoothness used for initial data.
struct SpaceParams {
    Family family = Family::B;
    double s = 1.5;
    double p = 2.0;
    double q = 2.0;
    double s0 = 1.5;

    /// Throws ParameterError unless p, q >= 1 and (family F => p finite).
    void validate() const;

    /// Same space with a different smoothness.
    SpaceParams with_smoothness(double smoothness) const;

    friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

/// Radial profile of phi_0: 1 on [0, 1], 0 on [3/2, inf), C-infinity step between.
double cutoff_profile(double radius);

/// Smooth dyadic resolution of unity tabulated on a frequency lattice.
///
/// phi_0(xi) = cutoff_profile(|xi|), phi_j(xi) = phi_0(2^-j xi) - phi_0(2^{1-j} xi).
/// J is the smallest index with 2^J >= max|xi|, so sum_{j<=J} phi_j = 1 on the whole
/// lattice and every band-limited field is decomposed without truncation.
class DyadicDecomposition {
public:
    const TorusGrid& grid() const noexcept { return grid_; }
    int max_index() const noexcept { return max_index_; }
    std::span<const double> cutoff(int j) const;

    /// True when phi_j vanishes on every lattice point.
    bool block_is_empty(int j) const;

private:
    friend DyadicDecomposition build_decomposition(const TorusGrid& grid);
    DyadicDecomposition(TorusGrid grid, int max_index, std::vector<std::vector<double>> tables);

    TorusGrid grid_;
    int max_index_;
    std::vector<std::vector<double>> tables_;
};

/// Throws ParameterError when max|xi| < 2 (no room for block 1).
DyadicDecomposition build_decomposition(const TorusGrid& grid);

/// Inverse transform of phi_j * f^; throws ParameterError for j outside [0, J].
RealField block(const SpectralField& f, int j, const DyadicDecomposition& decomposition);

/// Discrete Besov / Triebel-Lizorkin norm with the q = infinity (and p = infinity)
/// modifications. Blocks are combined in increasing j.
double a_norm(const SpectralField& f, const SpaceParams& space, const DyadicDecomposition& decomposition);
double a_norm(const RealField& f, const SpaceParams& space, const DyadicDecomposition& decomposition);

/// Per-block L_p norms ||F^-1 phi_j F f||_p, j = 0..J.
std::vector<double> block_norms(const SpectralField& f, double p, const DyadicDecomposition& decomposition);

struct PowerMapProbe {
    double ratio = 0.0;              ///< a_norm(|f|^{r-1} f) / a_norm(f)^r
    bool within_hypothesis = false;  ///< n/p < s < r
};

/// Empirical constant of the power-map estimate. The F-space corner p = 1, s = 1
/// is refused with ParameterError.
PowerMapProbe power_map_probe(const RealField& f, double r, const SpaceParams& space,
                              const DyadicDecomposition& decomposition);

}  // namespace hyperheat
