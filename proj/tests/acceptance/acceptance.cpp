#include "hyperheat/diagnostics.hpp"
#include "hyperheat/experiments/experiments.hpp"
#include "hyperheat/grid.hpp"
#include "hyperheat/littlewood_paley.hpp"
#include "hyperheat/sample_fields.hpp"
#include "hyperheat/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace hyperheat;
using namespace hyperheat::experiments;

namespace {

constexpr double kSemigroupTol = 1e-12;
constexpr double kMeanTol = 1e-12;
constexpr double kGaussianTol = 1e-8;
constexpr double kKernelMassTol = 1e-10;
constexpr double kPartitionTol = 1e-14;
constexpr double kReconstructionTol = 1e-12;
constexpr double kScalingTol = 1e-12;
constexpr double kIdentityTol = 1e-10;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g", x);
    return buffer;
}

/// Verdict of a record plus the metrics whose names start with one of `shown`.
Outcome from_record(const ResultRecord& record, const std::vector<std::string>& shown) {
    Outcome out{record.all_pass(), ""};
    for (const auto& prefix : shown) {
        for (const auto& m : record.metrics) {
            if (m.name.starts_with(prefix)) out.detail += m.name + "=" + fmt(m.value) + " ";
        }
    }
    for (const auto& m : record.metrics) {
        if (!m.pass) out.detail += "[failed " + m.name + "=" + fmt(m.value) + "] ";
    }
    return out;
}

Outcome semigroup_algebra() {
    double defect = 0.0;
    double identity = 0.0;
    double mean_drift = 0.0;
    for (int n : {1, 2}) {
        const TorusGrid g(n, n == 1 ? 128 : 32);
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const RealField f = random_smooth_field(g, seed, 12.0, 0.5);
            const SpectralField fh = forward_transform(f);
            for (double alpha : {1.0, 2.0, 3.0}) {
                const ModelParams m{alpha, 3.0, n};
                identity = std::max(identity, (apply_semigroup(fh, 0.0, m) - fh).l2());
                for (double t : {1e-3, 0.05, 0.3}) {
                    defect = std::max(defect, semigroup_property_check(fh, t, 0.7 * t, m));
                    const double drift = std::abs(apply_semigroup(fh, t, m)[0] - fh[0]);
                    mean_drift = std::max(mean_drift, drift / std::max(1.0, std::abs(fh[0])));
                }
            }
        }
    }
    return {identity == 0.0 && defect < kSemigroupTol && mean_drift < kMeanTol,
            "identity=" + fmt(identity) + " defect=" + fmt(defect) + " mean_drift=" + fmt(mean_drift)};
}

Outcome kernel_correctness() {
    const TorusGrid g(1, 256);
    const double t = 0.01;
    const RealField kernel = synthesize_kernel(t, g, ModelParams{1.0, 3.0, 1});
    double error = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.coordinate(i);
        double sum = 0.0;
        for (int m = -6; m <= 6; ++m) {
            const double y = x - 2.0 * std::numbers::pi * m;
            sum += std::exp(-y * y / (4.0 * t));
        }
        error = std::max(error, std::abs(kernel[i] - sum / std::sqrt(4.0 * std::numbers::pi * t)));
    }
    double mass_error = 0.0;
    for (double alpha : {1.0, 2.0, 3.0}) {
        for (double s : {1e-3, 0.01, 0.1, 1.0}) {
            const RealField k = synthesize_kernel(s, g, ModelParams{alpha, 3.0, 1});
            double mass = 0.0;
            for (double x : k.samples()) mass += x;
            mass_error = std::max(mass_error, std::abs(mass * g.cell_volume() - 1.0));
        }
    }
    const RealField quartic = synthesize_kernel(t, g, ModelParams{2.0, 3.0, 1});
    const double minimum = *std::min_element(quartic.samples().begin(), quartic.samples().end());
    return {error < kGaussianTol && mass_error < kKernelMassTol && minimum < 0.0,
            "gaussian_error=" + fmt(error) + " mass_error=" + fmt(mass_error) + " alpha2_min=" + fmt(minimum)};
}

Outcome littlewood_paley() {
    double partition = 0.0;
    double reconstruction = 0.0;
    double scaling = 0.0;
    for (int n : {1, 2}) {
        const TorusGrid g(n, n == 1 ? 256 : 64);
        const DyadicDecomposition d = build_decomposition(g);
        for (std::size_t k = 0; k < g.size(); ++k) {
            double sum = 0.0;
            for (int j = 0; j <= d.max_index(); ++j) sum += d.cutoff(j)[k];
            partition = std::max(partition, std::abs(sum - 1.0));
        }
        const RealField f = random_smooth_field(g, 11, 1e9, 0.0);
        const SpectralField fh = forward_transform(f);
        RealField total(g);
        for (int j = 0; j <= d.max_index(); ++j) total += block(fh, j, d);
        reconstruction = std::max(reconstruction, lp_norm(total - f, std::numeric_limits<double>::infinity()) /
                                                      lp_norm(f, std::numeric_limits<double>::infinity()));

        /// A mode with |k| in [0.75 * 2^j, 2^j] lies in block j alone.
        for (int j = 1; j <= 4; ++j) {
            std::vector<long> wave(static_cast<std::size_t>(n), 0);
            wave[0] = std::lround(0.75 * std::ldexp(1.0, j)) + (j == 1 ? 0 : 1);
            const SpectralField mode = forward_transform(cosine_mode(g, wave, 1.0, 0.3));
            for (double p : {1.0, 2.0, 4.0}) {
                for (const auto& [s, s_prime] : {std::pair{1.5, 0.0}, std::pair{-0.5, 2.0}}) {
                    const SpaceParams a{Family::B, s, p, 2.0, s};
                    const SpaceParams b{Family::B, s_prime, p, 2.0, s_prime};
                    const double ratio = a_norm(mode, a, d) / a_norm(mode, b, d);
                    const double expected = std::exp2(j * (s - s_prime));
                    scaling = std::max(scaling, std::abs(ratio / expected - 1.0));
                }
            }
        }
    }
    return {partition < kPartitionTol && reconstruction < kReconstructionTol && scaling < kScalingTol,
            "partition=" + fmt(partition) + " reconstruction=" + fmt(reconstruction) + " scaling=" + fmt(scaling)};
}

Outcome contraction_identity() {
    double worst = 0.0;
    for (int n : {1, 2}) {
        const TorusGrid g(n, n == 1 ? 512 : 64);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const RealField u = random_smooth_field(g, 2 * seed, 10.0, 1.0, 3.0);
            const RealField v = random_smooth_field(g, 2 * seed + 1, 10.0, 1.0, 3.0);
            for (double r : {2.0, 3.0, 3.5}) worst = std::max(worst, contraction_identity_check(u, v, r));
        }
    }
    return {worst < kIdentityTol, "max_defect=" + fmt(worst)};
}

Outcome run_default(const std::string& id, const std::vector<std::string>& shown) {
    return from_record(run_experiment(default_config(id)), shown);
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"semigroup algebra", semigroup_algebra},
        {"kernel correctness", kernel_correctness},
        {"caloric smoothing",
         [] { return run_default("smoothing", {"slope_"}); }},
        {"Littlewood-Paley decomposition", littlewood_paley},
        {"admissibility equivalence",
         [] {
             return run_default("admissibility-sweep", {"agreement_rate"});
         }},
        {"contraction identity", contraction_identity},
        {"mild solution vs oracle",
         [] {
             return run_default("solve", {"oracle_relative_error", "pde_residual", "fixed_point_consistency"});
         }},
        {"strong convergence",
         [] {
             return from_record(run_experiment(load_config(std::string(HYPERHEAT_CONFIG_DIR) + "/solve_strong.ini")),
                                {"strong_convergence_decreasing", "strong_convergence_final_ratio"});
         }},
        {"scaling equivariance", [] { return run_default("scaling", {"mismatch_"}); }},
        {"local stability",
         [] { return run_default("stability", {"rank_correlation", "deviation_smallest_delta"}); }},
        {"contraction threshold",
         [] {
             return run_default("contraction", {"ratio_strictly_decreasing", "min_max_ratio", "largest_contracting_T"});
         }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("criterion %2zu %s  %s  %s\n", i + 1, outcome.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
