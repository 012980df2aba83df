#include "hyperheat/experiments/experiments.hpp"

#include "hyperheat/admissibility.hpp"
#include "hyperheat/errors.hpp"
#include "hyperheat/mild_solver.hpp"
#include "hyperheat/parallel.hpp"
#include "hyperheat/sample_fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace hyperheat::experiments {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TorusGrid make_grid(const ExperimentConfig& config) {
    return TorusGrid(config.model.n, config.grid.points, config.grid.length);
}

TimeWeight weight_of(const ExperimentConfig& config, double T) {
    return solution_weight(config.a, config.v, T, config.model.r);
}

ResultRecord start_record(const ExperimentConfig& config) {
    ResultRecord record;
    record.experiment = config.id;
    record.input_digest = digest(emit_config(config));
    record.seed = config.seed;
    return record;
}

std::string tag(double value) {
    return format_double(value);
}

/// Low-mode demo datum: cos x_1 + 0.5 sin x_n + 0.25 cos(x_1 + x_n) (n = 1: x_n = x_1, last term cos 2x).
RealField demo_field(const TorusGrid& grid, double amplitude) {
    const double k = 2.0 * 3.14159265358979323846 / grid.side_length();
    return sample_function(grid, [&](std::span<const double> x) {
        const double a = k * x.front();
        const double b = k * x.back();
        if (x.size() == 1) return amplitude * (std::cos(a) + 0.5 * std::sin(a) + 0.25 * std::cos(2.0 * a));
        return amplitude * (std::cos(a) + 0.5 * std::sin(b) + 0.25 * std::cos(a + b));
    });
}

RealField initial_data(const ExperimentConfig& config, const TorusGrid& grid, double default_amplitude) {
    const std::string kind = config.param_string("data", "demo");
    const double amplitude = config.param("amplitude", default_amplitude);
    if (kind == "demo") return demo_field(grid, amplitude);
    if (kind == "random") {
        return random_smooth_field(grid, config.seed, config.param("max_frequency", 3.0), config.param("decay", 2.0),
                                   amplitude);
    }
    if (kind == "zero") return RealField(grid);
    throw ParameterError("params.data must be demo, random or zero");
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

std::vector<double> ranks(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = 0.5 * static_cast<double>(i + j);
        for (std::size_t k = i; k <= j; ++k) out[order[k]] = rank;
        i = j + 1;
    }
    return out;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    const auto rx = ranks(x);
    const auto ry = ranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    return sxx > 0.0 && syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 0.0;
}

double relative_l2(const RealField& a, const RealField& b) {
    const double diff = lp_norm(a - b, 2.0);
    const double ref = lp_norm(b, 2.0);
    if (ref == 0.0) return diff;
    return diff / ref;
}

/// X-norm of a real trajectory.
double trajectory_norm(const Trajectory& trajectory, const TimeWeight& weight, const SpaceParams& space,
                       const DyadicDecomposition& decomposition, double r) {
    std::vector<SpectralField> hats;
    hats.reserve(trajectory.size());
    for (const auto& f : trajectory.fields()) hats.push_back(forward_transform(f));
    return solution_space_norm(hats, trajectory.times(), weight, space, decomposition, r);
}

/// Single-mode extremal constant of t^{d/2alpha} ||W_t w|A^{s+d}|| / ||w|A^s|| for p = q = 2.
double single_mode_constant(const DyadicDecomposition& decomposition, const SpaceParams& space, double gain,
                            const std::vector<double>& times, const ModelParams& model) {
    const TorusGrid& grid = decomposition.grid();
    const auto symbol = dissipation_symbol(grid, model.alpha);
    const std::size_t size = grid.size();
    std::vector<double> best(size, 0.0);
    parallel_for(size, [&](std::size_t k) {
        double high = 0.0;
        double low = 0.0;
        for (int j = 0; j <= decomposition.max_index(); ++j) {
            const double phi = decomposition.cutoff(j)[k];
            if (phi == 0.0) continue;
            high += std::pow(2.0, 2.0 * j * (space.s + gain)) * phi * phi;
            low += std::pow(2.0, 2.0 * j * space.s) * phi * phi;
        }
        if (low == 0.0) return;
        const double base = std::sqrt(high / low);
        for (double t : times) {
            best[k] = std::max(best[k], std::pow(t, gain / (2.0 * model.alpha)) * std::exp(-t * symbol[k]) * base);
        }
    });
    return *std::max_element(best.begin(), best.end());
}

}  // namespace

ExperimentConfig default_config(const std::string& id) {
    ExperimentConfig c;
    c.id = canonical_id(id);
    c.seed = 20240611;
    c.output = "out/" + c.id;
    c.model = ModelParams{1.0, 3.0, 2};
    c.space = SpaceParams{Family::B, 1.5, 2.0, 2.0, 1.5};
    c.a = 0.0;
    c.v = 1.0;
    c.grid.points = 64;
    if (c.id == "smoothing") {
        c.model.n = 1;
        c.grid.points = 16384;
        c.space = SpaceParams{Family::B, 0.0, 2.0, 2.0, 0.0};
        c.params = {{"alphas", "1,1,2,2,1"}, {"gains", "1,2,2,4,0"}, {"samples", "20"},
                    {"corpus", "8"},         {"slope_tolerance", "0.05"}};
    } else if (c.id == "scaling") {
        c.model.n = 1;
        c.grid.points = 128;
        c.params = {{"alphas", "1,2"}, {"lambda", "2"}, {"amplitude", "0.5"}, {"tolerance", "1e-5"}};
    } else if (c.id == "criticality") {
        c.params = {};
    } else if (c.id == "contraction") {
        c.grid.points = 32;
        c.solver.T = 1.0;
        c.solver.slabs = 64;
        c.params = {{"halvings", "6"}, {"pairs", "8"}, {"max_frequency", "4"}};
    } else if (c.id == "stability") {
        c.grid.points = 32;
        c.solver.T = 0.1;
        c.params = {{"deltas", "1e-4,2e-4,4e-4,8e-4,1.6e-3"}, {"amplitude", "0.5"}, {"epsilon", "1e-3"}};
    } else if (c.id == "solve") {
        c.solver.T = 0.25;
        c.params = {{"data", "demo"}, {"amplitude", "1e-3"}, {"oracle_tolerance", "1e-6"},
                    {"residual_tolerance", "1e-4"}, {"strong_ratio", "1e-3"},  {"strong_levels", "9"}};
    } else if (c.id == "admissibility-sweep") {
        c.params = {{"tuples", "20000"}};
    }
    return c;
}

ResultRecord run_experiment(const ExperimentConfig& config) {
    const std::string id = canonical_id(config.id);
    if (id == "smoothing") return run_smoothing(config);
    if (id == "scaling") return run_scaling(config);
    if (id == "criticality") return run_criticality(config);
    if (id == "contraction") return run_contraction(config);
    if (id == "stability") return run_stability(config);
    if (id == "solve") return run_solve(config);
    return run_sweep(config);
}

ResultRecord run_smoothing(const ExperimentConfig& config) {
    config.validate();
    ResultRecord record = start_record(config);
    const TorusGrid grid = make_grid(config);
    const auto decomposition = build_decomposition(grid);
    const auto alphas = config.param_list("alphas", {1, 1, 2, 2, 1});
    const auto gains = config.param_list("gains", {1, 2, 2, 4, 0});
    if (alphas.size() != gains.size()) throw ParameterError("smoothing: alphas and gains differ in length");
    const auto samples = static_cast<std::size_t>(config.param_int("samples", 20));
    const int corpus = config.param_int("corpus", 8);
    const double tolerance = config.param("slope_tolerance", 0.05);
    const SpaceParams& space = config.space;
    const bool hilbert = space.p == 2.0 && space.q == 2.0;
    const double dim = config.model.n;

    for (std::size_t i = 0; i < alphas.size(); ++i) {
        ModelParams model = config.model;
        model.alpha = alphas[i];
        const double d = gains[i];
        const std::string key = "a" + tag(model.alpha) + "_d" + tag(d);
        const double t_min = std::pow(grid.max_frequency() / 16.0, -2.0 * model.alpha);
        const double t_max = std::min(1.0, std::pow(4.0, -2.0 * model.alpha));
        if (!(t_min < t_max)) throw ParameterError("smoothing: grid too coarse for alpha = " + tag(model.alpha));
        const auto times = log_spaced(t_min, t_max, samples);
        const double exponent = -space.s - dim / space.p - (d == 0.0 ? 0.5 : 0.0);
        const RealField omega = power_law_field(grid, exponent, config.seed + i);
        const auto report = smoothing_rate(omega, space, d, times, model);
        const double target = -d / (2.0 * model.alpha);
        record.metrics.push_back(make_metric("slope_" + key, report.slope, "in", target - tolerance,
                                             "caloric smoothing rate t^{-d/2alpha}", target + tolerance));
        auto& table = record.add_table("smoothing_" + key, {"t", "norm", "weighted_ratio"});
        for (std::size_t k = 0; k < times.size(); ++k) table.rows.push_back({times[k], report.norms[k], report.ratios[k]});

        const auto ratio_times = log_spaced(t_min, 1.0, samples);
        double corpus_max = 0.0;
        for (int c = 0; c < corpus; ++c) {
            const std::uint64_t seed = config.seed + 1000 * (i + 1) + static_cast<std::uint64_t>(c);
            const RealField w = c % 2 == 0
                                    ? random_smooth_field(grid, seed, grid.max_frequency() / std::ldexp(1.0, c % 7),
                                                          0.5 + 0.25 * c)
                                    : power_law_field(grid, -0.25 * c, seed);
            const auto r = smoothing_rate(w, space, d, ratio_times, model);
            corpus_max = std::max(corpus_max, *std::max_element(r.ratios.begin(), r.ratios.end()));
        }
        if (hilbert) {
            const double constant = single_mode_constant(decomposition, space, d, ratio_times, model);
            record.metrics.push_back(make_metric("fitted_constant_" + key, constant, "report", 0.0,
                                                 "constant of the smoothing estimate (single-mode extremal)"));
            record.metrics.push_back(make_metric("corpus_ratio_" + key, corpus_max, "<=", constant * (1.0 + 1e-12),
                                                 "weighted ratio bounded by one constant over (0,1]"));
        } else {
            record.metrics.push_back(make_metric("corpus_ratio_" + key, corpus_max, "report", 0.0,
                                                 "weighted ratio (no extremal constant for p,q != 2)"));
        }
    }
    return record;
}

ResultRecord run_scaling(const ExperimentConfig& config) {
    config.validate();
    ResultRecord record = start_record(config);
    const TorusGrid grid = make_grid(config);
    const double lambda = config.param("lambda", 2.0);
    const auto factor = static_cast<std::size_t>(lambda);
    if (lambda < 1.0 || static_cast<double>(factor) != lambda || (factor & (factor - 1)) != 0 ||
        grid.points_per_dim() / factor < 8) {
        throw ParameterError("scaling: lambda must be a power of two leaving at least 8 points per period");
    }
    const double tolerance = config.param("tolerance", 1e-5);
    const RealField u0 = initial_data(config, grid, 0.5);
    const std::size_t N = grid.points_per_dim();

    // x_j -> x_{lambda j mod N}, per direction.
    std::vector<std::size_t> stretched(grid.size());
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
        auto idx = grid.unflatten(flat);
        for (auto& i : idx) i = (i * factor) % N;
        stretched[flat] = grid.flatten(idx);
    }
    auto stretch = [&](const RealField& f, double amplitude) {
        RealField out(grid);
        for (std::size_t j = 0; j < grid.size(); ++j) out[j] = amplitude * f[stretched[j]];
        return out;
    };

    for (double alpha : config.param_list("alphas", {1.0, 2.0})) {
        ModelParams model = config.model;
        model.alpha = alpha;
        const std::string key = "a" + tag(alpha);
        const double amplitude = std::pow(lambda, 2.0 * alpha / (model.r - 1.0));
        const double dilation = std::pow(lambda, 2.0 * alpha);
        record.metrics.push_back(make_metric("amplitude_factor_" + key, amplitude, "report", 0.0,
                                             "u_lambda = lambda^{2alpha/(r-1)} u(lambda x, lambda^{2alpha} t)"));
        record.metrics.push_back(make_metric("time_dilation_" + key, dilation, "report", 0.0, "lambda^{2alpha} t"));

        SolverConfig base = config.solver;
        SolverConfig scaled = config.solver;
        scaled.T = base.T / dilation;
        const auto base_report = picard_solve(u0, base, model, weight_of(config, base.T), config.space);
        const auto scaled_report =
            picard_solve(stretch(u0, amplitude), scaled, model, weight_of(config, scaled.T), config.space);
        const Trajectory& u = *base_report.trajectory;
        const Trajectory& ul = *scaled_report.trajectory;
        auto& table = record.add_table("scaling_" + key, {"t_scaled", "t_base", "relative_mismatch"});
        double worst = 0.0;
        for (std::size_t i = 0; i < ul.size(); ++i) {
            const std::size_t j = u.find(ul.time(i) * dilation);
            if (j == u.size()) throw ParameterError("scaling: time grids are not commensurate");
            const double mismatch = relative_l2(ul.field(i), stretch(u.field(j), amplitude));
            worst = std::max(worst, mismatch);
            table.rows.push_back({ul.time(i), u.time(j), mismatch});
        }
        record.metrics.push_back(make_metric("converged_" + key,
                                             base_report.converged && scaled_report.converged ? 1.0 : 0.0, "==", 1.0,
                                             "mild solutions at both scales"));
        record.metrics.push_back(
            make_metric("mismatch_" + key, worst, "<", tolerance, "scaling equivariance of the equation"));
    }
    return record;
}

ResultRecord run_criticality(const ExperimentConfig& config) {
    config.validate();
    ResultRecord record = start_record(config);
    auto& table = record.add_table("critical_smoothness", {"n", "p", "alpha", "r", "critical_s0", "window_nonempty"});
    for (int n : {1, 2, 3, 4}) {
        for (double p : {1.0, 2.0, 4.0, kInf}) {
            for (double alpha : {1.0, 2.0, 3.0}) {
                for (double r : {2.0, 3.0, 4.0, 5.0}) {
                    const double crit = ModelParams{alpha, r, n}.critical_smoothness(p);
                    table.rows.push_back({double(n), p, alpha, r, crit, crit < r - 1.0 ? 1.0 : 0.0});
                }
            }
        }
    }
    record.metrics.push_back(make_metric("critical_n2_p2_a1_r3", ModelParams{1.0, 3.0, 2}.critical_smoothness(2.0),
                                         "==", 0.0, "critical smoothness n/p - 2alpha/(r-1)"));
    record.metrics.push_back(make_metric("critical_n4_p2_a2_r2", ModelParams{2.0, 2.0, 4}.critical_smoothness(2.0),
                                         "==", -2.0, "critical smoothness n/p - 2alpha/(r-1)"));

    const double crit = config.model.critical_smoothness(config.space.p);
    const auto cls = classify(config.space.s0, crit);
    record.metrics.push_back(make_metric("critical_s0", crit, "report", 0.0, "n/p - 2alpha/(r-1)"));
    record.metrics.push_back(make_metric("window_nonempty", crit < config.model.r - 1.0 ? 1.0 : 0.0, "report", 0.0,
                                         "n/p - 2alpha/(r-1) < s0 <= s < r-1 admits some s0"));
    const bool in_window =
        crit < config.space.s0 && config.space.s0 <= config.space.s && config.space.s < config.model.r - 1.0;
    record.metrics.push_back(make_metric("requested_in_window", in_window ? 1.0 : 0.0, "report", 0.0,
                                         "requested (s0, s) inside the existence window"));
    std::string verdict = to_string(cls);
    if (cls == Criticality::supercritical) verdict += ": local solutions expected";
    else if (cls == Criticality::critical) verdict += ": borderline, no conclusion";
    else verdict += ": outside the existence theory";
    record.labels["classification"] = verdict;
    return record;
}

ResultRecord run_contraction(const ExperimentConfig& config) {
    config.validate();
    ResultRecord record = start_record(config);
    const TorusGrid grid = make_grid(config);
    const auto decomposition = build_decomposition(grid);
    const ModelParams& model = config.model;
    const int halvings = config.param_int("halvings", 6);
    const int pairs = config.param_int("pairs", 8);
    const double max_frequency = config.param("max_frequency", 4.0);
    const auto adm = admissibility(config.a, config.v, config.space.s, config.space.s0, config.space.p, model);
    if (!adm.admissible) throw ParameterError("contraction: (a, v, s, s0) not admissible");

    struct Shape {
        RealField start;
        RealField slope;
        double radius;
    };
    std::mt19937_64 engine(config.seed);
    std::vector<std::pair<Shape, Shape>> shapes;
    for (int k = 0; k < pairs; ++k) {
        auto make = [&]() {
            const std::uint64_t s1 = engine();
            const std::uint64_t s2 = engine();
            const double radius = 0.1 + 0.9 * uniform01(engine);
            return Shape{random_smooth_field(grid, s1, max_frequency), random_smooth_field(grid, s2, max_frequency),
                         radius};
        };
        Shape first = make();
        Shape second = make();
        shapes.emplace_back(std::move(first), std::move(second));
    }

    auto& table = record.add_table("contraction", {"T", "max_ratio", "mean_ratio"});
    std::vector<double> horizons;
    std::vector<double> maxima;
    for (int h = 0; h <= halvings; ++h) {
        SolverConfig solver = config.solver;
        solver.T = std::ldexp(config.solver.T, -h);
        const auto times = make_time_grid(solver);
        const TimeWeight weight = weight_of(config, solver.T);
        auto build = [&](const Shape& shape) {
            std::vector<SpectralField> path;
            const SpectralField a = forward_transform(shape.start);
            const SpectralField b = forward_transform(shape.slope);
            path.push_back(a);
            for (double t : times) path.push_back(a + (t / solver.T) * b);
            std::vector<SpectralField> sampled(path.begin() + 1, path.end());
            const double norm = solution_space_norm(sampled, times, weight, config.space, decomposition, model.r);
            for (auto& f : path) f *= shape.radius / norm;
            return path;
        };
        double worst = 0.0;
        double total = 0.0;
        int counted = 0;
        for (const auto& [su, sw] : shapes) {
            const auto u = build(su);
            const auto w = build(sw);
            std::vector<SpectralField> forcing(u.size(), SpectralField(grid));
            std::vector<SpectralField> gap;
            parallel_for(u.size(), [&](std::size_t i) {
                forcing[i] = nonlinearity(u[i], model.r, solver.dealias_factor) -
                             nonlinearity(w[i], model.r, solver.dealias_factor);
            });
            for (std::size_t i = 1; i < u.size(); ++i) gap.push_back(u[i] - w[i]);
            const double denominator = solution_space_norm(gap, times, weight, config.space, decomposition, model.r);
            if (denominator == 0.0) continue;
            const auto image = duhamel_integrate(SpectralField(grid), forcing, times, solver.quadrature_order, model);
            const double ratio =
                solution_space_norm(image, times, weight, config.space, decomposition, model.r) / denominator;
            worst = std::max(worst, ratio);
            total += ratio;
            ++counted;
        }
        horizons.push_back(solver.T);
        maxima.push_back(worst);
        table.rows.push_back({solver.T, worst, counted ? total / counted : 0.0});
    }

    bool decreasing = true;
    for (std::size_t i = 1; i < maxima.size(); ++i) decreasing = decreasing && maxima[i] < maxima[i - 1];
    double threshold = 0.0;
    for (std::size_t i = 0; i < maxima.size(); ++i) {
        if (maxima[i] < 1.0) {
            threshold = horizons[i];
            break;
        }
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = maxima.size() >= 4 ? maxima.size() - 4 : 0; i < maxima.size(); ++i) {
        if (maxima[i] > 0.0) {
            lx.push_back(std::log(horizons[i]));
            ly.push_back(std::log(maxima[i]));
        }
    }
    record.metrics.push_back(make_metric("ratio_strictly_decreasing", decreasing ? 1.0 : 0.0, "==", 1.0,
                                         "contraction improves as T shrinks"));
    record.metrics.push_back(make_metric("min_max_ratio", *std::min_element(maxima.begin(), maxima.end()), "<", 1.0,
                                         "contraction for sufficiently small T"));
    record.metrics.push_back(make_metric("largest_contracting_T", threshold, "report", 0.0, "measured T*"));
    record.metrics.push_back(make_metric("ratio_exponent_fit", least_squares_slope(lx, ly), "report", 0.0,
                                         "log ratio vs log T over the smallest horizons"));
    if (!adm.v_infinite) {
        record.metrics.push_back(make_metric("ratio_exponent_predicted", adm.kappa / (2.0 * model.r * config.v),
                                             "report", 0.0, "T^{kappa/(2rv)} factor of the contraction estimate"));
    }
    return record;
}

ResultRecord run_stability(const ExperimentConfig& config) {
    config.validate();
    ResultRecord record = start_record(config);
    const TorusGrid grid = make_grid(config);
    const auto decomposition = build_decomposition(grid);
    const SpaceParams initial = config.space.with_smoothness(config.space.s0);
    const auto deltas = config.param_list("deltas", {1e-4, 2e-4, 4e-4, 8e-4, 1.6e-3});
    const double epsilon = config.param("epsilon", 1e-3);
    const RealField u0 = initial_data(config, grid, 0.5);
    RealField w = random_smooth_field(grid, config.seed, config.param("max_frequency", 3.0));
    w *= 1.0 / a_norm(w, initial, decomposition);
    const TimeWeight weight = weight_of(config, config.solver.T);

    const auto base = picard_solve(u0, config.solver, config.model, weight, config.space);
    const Trajectory& ub = *base.trajectory;
    bool converged = base.converged;
    std::vector<double> deviations;
    std::vector<double> last_curve;
    auto& table = record.add_table("stability", {"delta", "deviation"});
    for (double delta : deltas) {
        const auto run = picard_solve(u0 + delta * w, config.solver, config.model, weight, config.space);
        converged = converged && run.converged;
        const Trajectory& up = *run.trajectory;
        std::vector<double> curve(ub.size());
        parallel_for(ub.size(), [&](std::size_t i) { curve[i] = a_norm(up.field(i) - ub.field(i), initial, decomposition); });
        const double sup = *std::max_element(curve.begin(), curve.end());
        deviations.push_back(sup);
        table.rows.push_back({delta, sup});
        if (delta == *std::max_element(deltas.begin(), deltas.end())) last_curve = curve;
    }
    auto& curve_table = record.add_table("stability_time", {"t", "deviation"});
    for (std::size_t i = 0; i < ub.size(); ++i) curve_table.rows.push_back({ub.time(i), last_curve[i]});

    const std::size_t smallest = std::min_element(deltas.begin(), deltas.end()) - deltas.begin();
    double low = kInf;
    double high = 0.0;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        for (std::size_t j = 0; j < deltas.size(); ++j) {
            if (deltas[i] > 0.0 && deltas[j] == 2.0 * deltas[i] && deviations[i] > 0.0) {
                const double f = deviations[j] / deviations[i];
                low = std::min(low, f);
                high = std::max(high, f);
            }
        }
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 1; i < ub.size(); ++i) {
        const double excess = std::abs(last_curve[i] - last_curve[0]);
        if (excess > 0.0) {
            lx.push_back(std::log(ub.time(i)));
            ly.push_back(std::log(excess));
        }
    }
    record.metrics.push_back(make_metric("picard_converged", converged ? 1.0 : 0.0, "==", 1.0, "mild solutions exist"));
    record.metrics.push_back(make_metric("rank_correlation", spearman(deltas, deviations), "==", 1.0,
                                         "deviation monotone in the data distance"));
    record.metrics.push_back(make_metric("deviation_smallest_delta", deviations[smallest], "<", epsilon,
                                         "local stability: small data distance gives small deviation"));
    if (high > 0.0) {
        record.metrics.push_back(make_metric("doubling_factor_min", low, ">=", 1.5, "deviation roughly linear in delta"));
        record.metrics.push_back(make_metric("doubling_factor_max", high, "<=", 3.0, "deviation roughly linear in delta"));
    }
    record.metrics.push_back(make_metric("t_exponent_fit", least_squares_slope(lx, ly), "report", 0.0,
                                         "growth of the deviation in t"));
    record.metrics.push_back(make_metric("t_exponent_bound", 1.0 - config.a / 2.0, "report", 0.0,
                                         "c1 delta + c t^{1-a/2} stability bound"));
    return record;
}

ResultRecord run_solve(const ExperimentConfig& config) {
    config.validate();
    ResultRecord record = start_record(config);
    const TorusGrid grid = make_grid(config);
    const auto decomposition = build_decomposition(grid);
    const ModelParams& model = config.model;
    const SolverConfig& solver = config.solver;
    const TimeWeight weight = weight_of(config, solver.T);
    const RealField u0 = initial_data(config, grid, 1e-3);

    PicardReport report;
    try {
        report = picard_solve(u0, solver, model, weight, config.space);
    } catch (const BlowupSuspected& e) {
        record.labels["picard"] = e.what();
        record.metrics.push_back(make_metric("picard_converged", 0.0, "==", 1.0, "unique mild solution on (0,T)"));
        return record;
    }
    const Trajectory& u = *report.trajectory;
    auto& iterations = record.add_table("picard", {"iteration", "distance", "contraction_factor"});
    for (std::size_t k = 0; k < report.distances.size(); ++k) {
        const double q = k == 0 ? std::numeric_limits<double>::quiet_NaN() : report.contraction_factors[k - 1];
        iterations.rows.push_back({double(k + 1), report.distances[k], q});
    }
    record.metrics.push_back(make_metric("picard_converged", report.converged ? 1.0 : 0.0, "==", 1.0,
                                         "unique mild solution on (0,T)"));
    record.metrics.push_back(make_metric("picard_iterations", report.iterations, "report", 0.0, "Banach iteration"));
    double q_max = 0.0;
    for (double q : report.contraction_factors) q_max = std::max(q_max, q);
    record.metrics.push_back(make_metric("contraction_factor_max", q_max, "report", 0.0, "observed d_{k+1}/d_k"));

    const Trajectory oracle = etd_oracle(u0, solver, model);
    auto& agreement = record.add_table("oracle", {"t", "picard_l2", "etd_l2", "relative_difference"});
    for (std::size_t i = 0; i < u.size(); ++i) {
        agreement.rows.push_back({u.time(i), lp_norm(u.field(i), 2.0), lp_norm(oracle.field(i), 2.0),
                                  relative_l2(oracle.field(i), u.field(i))});
    }
    const double oracle_error = relative_l2(oracle.field(u.size() - 1), u.field(u.size() - 1));
    record.metrics.push_back(make_metric("oracle_relative_error", oracle_error, "<",
                                         config.param("oracle_tolerance", 1e-6), "independent integrator at t = T"));
    record.metrics.push_back(make_metric("pde_residual", pde_residual(u, model, solver.dealias_factor), "<",
                                         config.param("residual_tolerance", 1e-4), "distributional equation"));

    const auto image = duhamel_apply(u0, u, solver, model);
    const double scale = trajectory_norm(u, weight, config.space, decomposition, model.r);
    double consistency = 0.0;
    if (scale > 0.0) {
        std::vector<RealField> gaps;
        for (std::size_t i = 0; i < u.size(); ++i) gaps.push_back(image.field(i) - u.field(i));
        const Trajectory gap(std::vector<double>(u.times().begin(), u.times().end()), std::move(gaps));
        consistency = trajectory_norm(gap, weight, config.space, decomposition, model.r) / scale;
    }
    record.metrics.push_back(make_metric("fixed_point_consistency", consistency, "<=", 2.0 * solver.picard_tol,
                                         "fixed point of the Duhamel operator"));

    const auto distances = strong_convergence_check(u, u0, config.space);
    const double initial_norm = a_norm(u0, config.space.with_smoothness(config.space.s0), decomposition);
    auto& strong = record.add_table("strong_convergence", {"m", "t", "distance"});
    const int m_max = config.param_int("strong_levels", 6);
    if (m_max < 2 || m_max > solver.octaves) throw ParameterError("solve: strong_levels must lie in [2, octaves]");
    std::vector<double> sequence;
    for (int m = 1; m <= m_max; ++m) {
        const std::size_t i = u.find(std::ldexp(solver.T, -m));
        if (i == u.size()) throw ParameterError("solve: time grid lacks T/2^" + std::to_string(m));
        sequence.push_back(distances[i].second);
        strong.rows.push_back({double(m), distances[i].first, distances[i].second});
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < sequence.size(); ++i) decreasing = decreasing && sequence[i] < sequence[i - 1];
    const bool all_zero = std::all_of(sequence.begin(), sequence.end(), [](double d) { return d == 0.0; });
    record.metrics.push_back(make_metric("strong_convergence_decreasing", decreasing || all_zero ? 1.0 : 0.0, "==",
                                         1.0, "u(t) -> u0 in the initial-data space"));
    const double final_ratio = initial_norm > 0.0 ? sequence.back() / initial_norm : sequence.back();
    record.metrics.push_back(make_metric("strong_convergence_final_ratio", final_ratio, "<",
                                         config.param("strong_ratio", 1e-3), "u(t) -> u0 in the initial-data space"));

    auto& snapshots = record.add_table("snapshots", {"t", "point", "u"});
    for (int m = m_max; m >= 0; --m) {
        const std::size_t i = u.find(std::ldexp(solver.T, -m));
        for (std::size_t j = 0; j < grid.size(); ++j) snapshots.rows.push_back({u.time(i), double(j), u.field(i)[j]});
    }
    return record;
}

ResultRecord run_sweep(const ExperimentConfig& config) {
    config.validate();
    ResultRecord record = start_record(config);
    const int tuples = config.param_int("tuples", 20000);
    std::mt19937_64 engine(config.seed);
    auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * uniform01(engine); };
    long agree = 0;
    long agree_bed = 0;
    long bed_total = 0;
    long agree_corrected = 0;
    auto& examples = record.add_table("disagreements", {"a", "v", "s", "s0", "alpha", "r", "delta", "kappa",
                                                       "window_holds", "delta_kappa_positive"});
    for (int i = 0; i < tuples; ++i) {
        const double r = uniform(2.0, 6.0);
        const double alpha = uniform(0.5, 4.0);
        const double s0 = uniform(-2.0, 3.0);
        const double s = s0 + uniform(0.0, 2.0);
        const double a = uniform(-2.0, 4.0);
        const double inverse_v = uniform01(engine) < 0.05 ? 0.0 : uniform(0.0, 2.0);
        const double v = inverse_v == 0.0 ? kInf : 1.0 / inverse_v;
        const ModelParams model{alpha, r, 2};
        const auto adm = admissibility(a, v, s, s0, 2.0, model);
        const bool positive = adm.delta > 0.0 && adm.kappa > 0.0;
        const bool same = adm.window_holds == positive;
        agree += same;
        const double lower = r * (s - s0) / alpha;
        const bool corrected = lower < a + inverse_v && a + inverse_v < 2.0 * r / (r - 1.0);
        agree_corrected += corrected == positive;
        if (a + inverse_v < 2.0) {
            ++bed_total;
            agree_bed += same;
        }
        if (!same && examples.rows.size() < 50) {
            examples.rows.push_back({a, v, s, s0, alpha, r, adm.delta, adm.kappa, double(adm.window_holds),
                                     double(positive)});
        }
    }
    const double n = tuples;
    record.metrics.push_back(make_metric("agreement_rate", agree / n, "==", 1.0,
                                         "window predicate equivalent to delta > 0 and kappa > 0"));
    record.metrics.push_back(make_metric("disagreements", double(tuples - agree), "report", 0.0, "count"));
    record.metrics.push_back(make_metric("agreement_rate_below_upper_bound", bed_total ? agree_bed / double(bed_total) : 1.0,
                                         "report", 0.0, "restricted to a + 1/v < 2"));
    record.metrics.push_back(make_metric("agreement_rate_corrected_bound", agree_corrected / n, "report", 0.0,
                                         "upper bound 2r/(r-1) in place of 2"));
    return record;
}

}  // namespace hyperheat::experiments
