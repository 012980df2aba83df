#pragma once

#include "hyperheat/grid.hpp"
#include "hyperheat/littlewood_paley.hpp"

#include <span>
#include <string>
#include <vector>

namespace hyperheat {

/// Parameters of du/dt + (-Laplace)^alpha u = |u|^{r-1} u in n space dimensions.
struct ModelParams {
    double alpha = 1.0;
    double r = 3.0;
    int n = 2;

    /// Throws ParameterError unless alpha > 0, r >= 2, n >= 1.
    void validate() const;
    /// Non-integer alpha is supported by the multiplier but is outside the tested range.
    bool alpha_is_integer() const noexcept;
    /// n/p - 2 alpha / (r - 1); p = infinity gives -2 alpha / (r - 1).
    double critical_smoothness(double p) const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// |xi|^{2 alpha} on the lattice; integer alpha uses repeated squaring of |xi|^2.
std::vector<double> dissipation_symbol(const TorusGrid& grid, double alpha);

/// W_t: multiply every coefficient by exp(-t |xi|^{2 alpha}). t = 0 returns the input.
SpectralField apply_semigroup(const SpectralField& f, double t, const ModelParams& model);
RealField apply_semigroup(const RealField& f, double t, const ModelParams& model);

/// Periodic kernel G_t = V^{-1} sum_k exp(-t |xi_k|^{2 alpha}) e^{i xi_k x}; integrates to 1.
RealField synthesize_kernel(double t, const TorusGrid& grid, const ModelParams& model);

/// ||W_{t+s} f - W_t W_s f||_2 / ||f||_2 (0 for the zero field).
double semigroup_property_check(const SpectralField& f, double t, double s, const ModelParams& model);

struct SmoothingReport {
    double gain = 0.0;                 ///< smoothness gain d
    double slope = 0.0;                ///< least-squares slope of log norm vs log t over t <= 1
    double intercept = 0.0;
    std::vector<double> times;
    std::vector<double> norms;         ///< ||W_t w | A^{s+d}||
    std::vector<double> ratios;        ///< t^{d/2alpha} ||W_t w | A^{s+d}|| / ||w | A^s||
    bool norms_nonincreasing = true;
    bool degenerate = false;           ///< energy in at most one dyadic block
    std::string note;
};

/// Probe of the caloric smoothing estimate ||W_t w | A^{s+d}|| <= c t^{-d/2alpha} ||w | A^s||.
/// Times must be positive and strictly increasing; samples beyond t = 1 are reported
/// but excluded from the fit.
SmoothingReport smoothing_rate(const RealField& omega, const SpaceParams& space, double gain,
                               std::span<const double> times, const ModelParams& model);

/// n log-spaced samples in [t_min, t_max].
std::vector<double> log_spaced(double t_min, double t_max, std::size_t count);

}  // namespace hyperheat
