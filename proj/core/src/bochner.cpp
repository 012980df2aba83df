#include "hyperheat/bochner.hpp"

#include "hyperheat/errors.hpp"
#include "hyperheat/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperheat {

Trajectory::Trajectory(std::vector<double> times, std::vector<RealField> fields)
    : times_(std::move(times)), fields_(std::move(fields)) {
    if (times_.empty() || times_.size() != fields_.size()) {
        throw ParameterError("Trajectory: need one field per time and at least one sample");
    }
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!(times_[i] > 0.0) || (i > 0 && !(times_[i] > times_[i - 1]))) {
            throw ParameterError("Trajectory: times must be positive and strictly increasing");
        }
        if (!(fields_[i].grid() == fields_.front().grid())) {
            throw ParameterError("Trajectory: all fields must share one grid");
        }
    }
}

std::size_t Trajectory::find(double t) const noexcept {
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (std::abs(times_[i] - t) <= 1e-12 * std::abs(t)) return i;
    }
    return times_.size();
}

void TimeWeight::validate() const {
    if (!(v >= 0.5)) throw ParameterError("TimeWeight: v must be >= 1/2");
    if (!(T > 0.0) || !std::isfinite(T)) throw ParameterError("TimeWeight: T must be positive and finite");
    if (!std::isfinite(b)) throw ParameterError("TimeWeight: b must be finite");
}

bool TimeWeight::tempered() const noexcept { return b < 1.0 - (std::isinf(v) ? 0.0 : 1.0 / v); }

TimeWeight solution_weight(double a, double v, double T, double r) { return TimeWeight{a / (2.0 * r), v, T}; }

namespace {

// Exact integral of g(t) = g0 (t/t0)^sigma over [t0, t1].
double power_segment(double t0, double g0, double t1, double sigma) {
    const double log_ratio = std::log(t1 / t0);
    const double e = sigma + 1.0;
    if (std::abs(e * log_ratio) < 1e-10) return g0 * t0 * log_ratio * (1.0 + 0.5 * e * log_ratio);
    return g0 * t0 * std::expm1(e * log_ratio) / e;
}

double local_exponent(double t0, double g0, double t1, double g1) { return std::log(g1 / g0) / std::log(t1 / t0); }

}  // namespace

WeightedNorm weighted_time_norm(std::span<const double> times, std::span<const double> norms, double b, double T,
                                double exponent) {
    if (times.empty() || times.size() != norms.size()) throw ParameterError("weighted_time_norm: empty or mismatched");
    if (!(exponent >= 1.0)) throw ParameterError("weighted_time_norm: exponent must be >= 1");
    if (!(T > 0.0)) throw ParameterError("weighted_time_norm: T must be positive");

    WeightedNorm result;
    const std::size_t m = times.size();
    if (times.front() > 1e-2 * T) {
        result.coverage_warning = true;
        result.note = "samples cover fewer than two decades of (0, T)";
    }

    // Weighted values t^b ||u||, scaled by their max to keep powers in range.
    std::vector<double> w(m);
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        w[i] = std::pow(times[i], b) * norms[i];
        scale = std::max(scale, w[i]);
    }
    if (std::isinf(exponent)) {
        result.value = scale;
        return result;
    }
    if (scale == 0.0) return result;

    std::vector<double> g(m);
    for (std::size_t i = 0; i < m; ++i) g[i] = std::pow(w[i] / scale, exponent);

    double integral = 0.0;
    // Head (0, t_1).
    if (g[0] > 0.0) {
        if (m >= 2 && g[1] > 0.0) {
            const double sigma = local_exponent(times[0], g[0], times[1], g[1]);
            if (sigma <= -1.0) {
                result.value = std::numeric_limits<double>::infinity();
                result.note = "integrand not integrable at t = 0";
                return result;
            }
            integral += g[0] * times[0] / (sigma + 1.0);
        } else {
            integral += g[0] * times[0];
        }
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double t0 = times[i];
        const double t1 = times[i + 1];
        if (g[i] > 0.0 && g[i + 1] > 0.0) {
            integral += power_segment(t0, g[i], t1, local_exponent(t0, g[i], t1, g[i + 1]));
        } else {
            integral += 0.5 * (g[i] * t0 + g[i + 1] * t1) * std::log(t1 / t0);
        }
    }
    // Tail (t_M, T).
    if (times.back() < T && g[m - 1] > 0.0) {
        double sigma = 0.0;
        if (m >= 2 && g[m - 2] > 0.0) sigma = local_exponent(times[m - 2], g[m - 2], times[m - 1], g[m - 1]);
        integral += power_segment(times[m - 1], g[m - 1], T, sigma);
    }
    result.value = scale * std::pow(integral, 1.0 / exponent);
    return result;
}

WeightedNorm weighted_norm(const Trajectory& trajectory, const TimeWeight& weight, const SpaceParams& space,
                           double exponent) {
    weight.validate();
    space.validate();
    const DyadicDecomposition decomposition = build_decomposition(trajectory.grid());
    std::vector<double> norms(trajectory.size());
    parallel_for(trajectory.size(),
                 [&](std::size_t i) { norms[i] = a_norm(trajectory.field(i), space, decomposition); });
    return weighted_time_norm(trajectory.times(), norms, weight.b, weight.T, exponent);
}

}  // namespace hyperheat
