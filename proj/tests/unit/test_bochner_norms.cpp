#include "hyperheat/admissibility.hpp"
#include "hyperheat/bochner.hpp"
#include "hyperheat/errors.hpp"
#include "hyperheat/sample_fields.hpp"
#include "hyperheat/solver_config.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace hyperheat;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Trajectory power_trajectory(const RealField& g, const std::vector<double>& times, double beta) {
    std::vector<RealField> fields;
    for (double t : times) fields.push_back(std::pow(t, beta) * g);
    return Trajectory(times, std::move(fields));
}

std::vector<double> grid_times(double T, std::size_t slabs = 128) {
    SolverConfig c;
    c.T = T;
    c.slabs = slabs;
    return make_time_grid(c);
}

}  // namespace

TEST_CASE("trajectory invariants") {
    const TorusGrid g(1, 16);
    const RealField f(g);
    CHECK_THROWS_AS(Trajectory({0.1, 0.1}, {f, f}), ParameterError);
    CHECK_THROWS_AS(Trajectory({0.0, 0.1}, {f, f}), ParameterError);
    CHECK_THROWS_AS(Trajectory({0.1}, {f, f}), ParameterError);
    CHECK_THROWS_AS(Trajectory({0.1, 0.2}, {f, RealField(TorusGrid(1, 32))}), ParameterError);
    const Trajectory t({0.1, 0.2, 0.4}, {f, f, f});
    CHECK(t.find(0.2) == 1);
    CHECK(t.find(0.2 * (1 + 1e-14)) == 1);
    CHECK(t.find(0.3) == 3);
}

TEST_CASE("time weights") {
    CHECK_THROWS_AS((TimeWeight{0.0, 0.4, 1.0}.validate()), ParameterError);
    CHECK_THROWS_AS((TimeWeight{0.0, 1.0, 0.0}.validate()), ParameterError);
    CHECK_NOTHROW((TimeWeight{0.0, kInf, 1.0}.validate()));
    CHECK((TimeWeight{-0.5, 2.0, 1.0}.tempered()));
    CHECK_FALSE((TimeWeight{0.5, 2.0, 1.0}.tempered()));
    const auto w = solution_weight(0.6, 1.0, 0.5, 3.0);
    CHECK(w.b == doctest::Approx(0.1));
    CHECK(w.T == 0.5);
}

TEST_CASE("weighted norm of a constant trajectory") {
    const TorusGrid g(1, 16);
    const RealField one(g, std::vector<double>(g.size(), 1.0));
    const auto times = grid_times(1.0);
    const auto traj = power_trajectory(one, times, 0.0);
    const SpaceParams sup{Family::B, 0.0, kInf, kInf, 0.0};
    const auto norm = weighted_norm(traj, TimeWeight{0.0, 1.0, 1.0}, sup, 1.0);
    CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_FALSE(norm.coverage_warning);
}

TEST_CASE("weight cancellation in the sup norm") {
    const TorusGrid g(2, 32);
    const auto d = build_decomposition(g);
    const RealField f = random_smooth_field(g, 2, 6.0);
    const SpaceParams sp{Family::B, 1.5, 2.0, 2.0, 1.5};
    const double b = 0.3;
    const auto traj = power_trajectory(f, grid_times(0.5, 16), -b);
    const auto norm = weighted_norm(traj, TimeWeight{b, 1.0, 0.5}, sp, kInf);
    CHECK(norm.value == doctest::Approx(a_norm(f, sp, d)).epsilon(1e-13));
}

TEST_CASE("power trajectories match the closed-form integral") {
    const TorusGrid g(1, 16);
    const RealField one(g, std::vector<double>(g.size(), 1.0));
    const SpaceParams sup{Family::B, 0.0, kInf, kInf, 0.0};
    const double T = 0.25;
    const auto times = grid_times(T);
    for (double beta : {-0.3, 0.0, 0.7, 2.0}) {
        for (double b : {-0.2, 0.0, 0.25}) {
            for (double e : {1.0, 2.5, 6.0}) {
                const double k = (b + beta) * e + 1.0;
                if (k <= 0.0) continue;
                const double exact = std::pow(std::pow(T, k) / k, 1.0 / e);
                const double value = weighted_norm(power_trajectory(one, times, beta), TimeWeight{b, 1.0, T}, sup, e).value;
                CHECK(value == doctest::Approx(exact).epsilon(1e-4));
            }
        }
    }
}

TEST_CASE("divergent weights give infinity") {
    const std::vector<double> times{0.01, 0.02, 0.04};
    const std::vector<double> norms{100.0, 50.0, 25.0};
    CHECK(std::isinf(weighted_time_norm(times, norms, -0.2, 0.04, 1.0).value));
    CHECK(std::isfinite(weighted_time_norm(times, norms, 0.5, 0.04, 1.0).value));
}

TEST_CASE("coverage warning") {
    const std::vector<double> times{0.1, 0.5, 1.0};
    const std::vector<double> norms{1.0, 1.0, 1.0};
    CHECK(weighted_time_norm(times, norms, 0.0, 1.0, 2.0).coverage_warning);
    CHECK_FALSE(weighted_time_norm(grid_times(1.0), std::vector<double>(grid_times(1.0).size(), 1.0), 0.0, 1.0, 2.0)
                    .coverage_warning);
}

TEST_CASE("refinement changes smooth trajectories little") {
    const TorusGrid g(1, 16);
    const RealField one(g, std::vector<double>(g.size(), 1.0));
    const SpaceParams sup{Family::B, 0.0, kInf, kInf, 0.0};
    auto value = [&](std::size_t slabs) {
        std::vector<double> times = grid_times(1.0, slabs);
        std::vector<RealField> fields;
        for (double t : times) fields.push_back((1.0 + std::sin(3.0 * t)) * one);
        return weighted_norm(Trajectory(times, fields), TimeWeight{-0.1, 1.0, 1.0}, sup, 3.0).value;
    };
    CHECK(std::abs(value(256) / value(128) - 1.0) < 1e-3);
}

TEST_CASE("weighted norm is homogeneous and monotone") {
    const std::vector<double> times = grid_times(1.0, 32);
    std::vector<double> a(times.size());
    std::vector<double> b(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        a[i] = 1.0 + times[i];
        b[i] = 2.0 + times[i];
    }
    std::vector<double> scaled = a;
    for (double& x : scaled) x *= 3.0;
    for (double e : {1.0, 4.0, kInf}) {
        CHECK(weighted_time_norm(times, scaled, -0.1, 1.0, e).value ==
              doctest::Approx(3.0 * weighted_time_norm(times, a, -0.1, 1.0, e).value).epsilon(1e-13));
        CHECK(weighted_time_norm(times, a, -0.1, 1.0, e).value <= weighted_time_norm(times, b, -0.1, 1.0, e).value);
    }
}

TEST_CASE("admissibility exponents") {
    const ModelParams r2{1.0, 2.0, 2};
    const auto x = admissibility(0.5, 1.0, 1.0, 1.0, 2.0, r2);
    CHECK(x.delta == doctest::Approx(1.5));
    CHECK(x.kappa == doctest::Approx(2.5));
    CHECK(x.admissible);

    CHECK_FALSE(admissibility(1.0, 1.0, 1.0, 1.0, 2.0, r2).window_holds);
    CHECK_FALSE(admissibility(1.5, 2.0, 1.0, 1.0, 2.0, r2).admissible);

    const auto boundary = admissibility(0.5, 2.0, 1.5, 1.0, 2.0, r2);
    CHECK(boundary.delta == 0.0);
    CHECK_FALSE(boundary.window_holds);

    const ModelParams heat{1.0, 3.0, 2};
    const auto critical = admissibility(0.0, 1.0, 0.0, 0.0, 2.0, heat);
    CHECK(critical.critical_s0 == 0.0);
    CHECK(critical.classification == Criticality::critical);
    CHECK(classify(0.5, 0.0) == Criticality::supercritical);
    CHECK(classify(-0.5, 0.0) == Criticality::subcritical);
    CHECK(classify(1e-13, 0.0) == Criticality::critical);
}

TEST_CASE("infinite v") {
    const ModelParams m{1.0, 3.0, 2};
    const auto a = admissibility(1.9, kInf, 1.0, 1.0, 2.0, m);
    CHECK(a.v_infinite);
    CHECK(a.window_holds);
    CHECK(a.delta == doctest::Approx(1.9));
    CHECK(a.kappa == doctest::Approx(1.9 + 6.0 - 5.7));
    CHECK_FALSE(admissibility(2.0, kInf, 1.0, 1.0, 2.0, m).window_holds);
}

TEST_CASE("window and exponent signs") {
    const ModelParams m{1.0, 3.0, 2};
    CHECK(equivalence_check(0.5, 1.0, 1.2, 1.0, m));
    CHECK(equivalence_check(-1.0, 1.0, 1.2, 1.0, m));
    CHECK_THROWS_AS(equivalence_check(0.5, 0.5, 1.0, 1.0, m), ParameterError);
    // Above a + 1/v = 2 both exponents stay positive up to 2r/(r-1).
    const ModelParams r2{1.0, 2.0, 2};
    const auto gap = admissibility(2.5, 1.0, 1.0, 1.0, 2.0, r2);
    CHECK(gap.delta > 0.0);
    CHECK(gap.kappa > 0.0);
    CHECK_FALSE(gap.window_holds);
    CHECK_FALSE(equivalence_check(2.5, 1.0, 1.0, 1.0, r2));
}

TEST_CASE("solver time grids") {
    SolverConfig c;
    c.T = 0.25;
    const auto t = make_time_grid(c);
    CHECK(t.back() == 0.25);
    for (std::size_t i = 1; i < t.size(); ++i) {
        CHECK(t[i] > t[i - 1]);
        CHECK(t[i] - t[i - 1] <= c.T / static_cast<double>(c.slabs) * (1.0 + 1e-12));
    }
    for (int m = 0; m <= c.octaves; ++m) {
        CHECK(std::find(t.begin(), t.end(), std::ldexp(c.T, -m)) != t.end());
    }
    SolverConfig scaled = c;
    scaled.T = c.T / 16.0;
    const auto s = make_time_grid(scaled);
    REQUIRE(s.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(s[i] == t[i] / 16.0);

    c.time_grid = TimeGridKind::uniform;
    c.slabs = 8;
    const auto u = make_time_grid(c);
    REQUIRE(u.size() == 8);
    CHECK(u[3] == doctest::Approx(0.125));
    CHECK(time_grid_from_string(to_string(TimeGridKind::uniform)) == TimeGridKind::uniform);

    SolverConfig bad;
    bad.slabs = 3;
    CHECK_THROWS_AS(bad.validate(), ParameterError);
    bad = SolverConfig{};
    bad.picard_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), ParameterError);
    bad = SolverConfig{};
    bad.T = -1.0;
    CHECK_THROWS_AS(bad.validate(), ParameterError);
}
