#pragma once

#include "hyperheat/grid.hpp"
#include "hyperheat/littlewood_paley.hpp"

#include <span>
#include <string>
#include <vector>

namespace hyperheat {

/// Snapshots u(., t_i) at strictly increasing positive times, all on one grid.
class Trajectory {
public:
    Trajectory(std::vector<double> times, std::vector<RealField> fields);

    std::span<const double> times() const noexcept { return times_; }
    const std::vector<RealField>& fields() const noexcept { return fields_; }
    std::size_t size() const noexcept { return times_.size(); }
    double time(std::size_t i) const { return times_.at(i); }
    const RealField& field(std::size_t i) const { return fields_.at(i); }
    const TorusGrid& grid() const { return fields_.front().grid(); }

    /// Index of the sample whose time equals t to 1e-12 relative; size() if absent.
    std::size_t find(double t) const noexcept;

private:
    std::vector<double> times_;
    std::vector<RealField> fields_;
};

/// Weight t^b on (0, T); v is the integrability parameter of the weighted space.
struct TimeWeight {
    double b = 0.0;
    double v = 1.0;
    double T = 1.0;

    /// Throws ParameterError unless v >= 1/2 and T > 0 finite.
    void validate() const;
    /// b < 1 - 1/v (zero extension is a tempered distribution when s > 0).
    bool tempered() const noexcept;

    friend bool operator==(const TimeWeight&, const TimeWeight&) = default;
};

/// The weight of the solution space L_{2rv}((0,T), a/(2r), A^s_{p,q}).
TimeWeight solution_weight(double a, double v, double T, double r);

struct WeightedNorm {
    double value = 0.0;
    bool coverage_warning = false;  ///< samples span fewer than two decades below T
    std::string note;
};

/// (int_0^T t^{b e} ||u(t)|X||^e dt)^{1/e} for finite e, sup_i t_i^b ||u(t_i)|X|| for e = infinity.
///
/// The integrand is interpolated as a power law between neighbouring samples and
/// integrated exactly on each interval; (0, t_1) and (t_M, T) use the power law of
/// the two nearest samples. A divergent head (local exponent <= -1) yields +inf.
WeightedNorm weighted_norm(const Trajectory& trajectory, const TimeWeight& weight, const SpaceParams& space,
                           double exponent);

/// Same quadrature on precomputed spatial norms.
WeightedNorm weighted_time_norm(std::span<const double> times, std::span<const double> norms, double b, double T,
                                double exponent);

}  // namespace hyperheat
