#include "hyperheat/errors.hpp"
#include "hyperheat/mild_solver.hpp"
#include "hyperheat/sample_fields.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace hyperheat;

namespace {

/// phi_1 and phi_2 in long double: 40-term series near 0, closed form elsewhere.
long double reference_phi(int order, long double z) {
    if (std::fabs(z) < 1.0L) {
        long double term = 1.0L;
        long double sum = 0.0L;
        for (int k = 0; k < 40; ++k) {
            long double denom = 1.0L;
            for (int i = 1; i <= k + order; ++i) denom *= i;
            sum += term / denom;
            term *= z;
        }
        return sum;
    }
    const long double e = std::expm1(z);
    return order == 1 ? e / z : (e - z) / (z * z);
}

RealField demo(const TorusGrid& g, double amplitude) {
    return sample_function(g, [&](std::span<const double> x) {
        return amplitude * (std::cos(x[0]) + 0.5 * std::sin(x[1]) + 0.25 * std::cos(x[0] + x[1]));
    });
}

SolverConfig config(double T, std::size_t slabs = 64) {
    SolverConfig c;
    c.T = T;
    c.slabs = slabs;
    c.octaves = 8;
    return c;
}

const SpaceParams kSpace{Family::B, 1.5, 2.0, 2.0, 1.5};
const ModelParams kHeat{1.0, 3.0, 2};

TimeWeight weight(double T) { return TimeWeight{0.0, 1.0, T}; }

}  // namespace

TEST_CASE("phi functions") {
    CHECK(phi1(0.0) == 1.0);
    CHECK(phi2(0.0) == 0.5);
    for (double z : {-1e-8, -0.1, -0.49, -0.5, -0.51, -1.0, -3.0, -40.0, -1e4, 0.3, 2.0}) {
        CHECK(phi1(z) == doctest::Approx(static_cast<double>(reference_phi(1, z))).epsilon(1e-14));
        CHECK(phi2(z) == doctest::Approx(static_cast<double>(reference_phi(2, z))).epsilon(1e-14));
    }
}

TEST_CASE("signed power and padding sizes") {
    CHECK(signed_power(-2.0, 3.0) == -8.0);
    CHECK(signed_power(-2.0, 2.0) == -4.0);
    CHECK(signed_power(4.0, 2.5) == doctest::Approx(32.0));
    CHECK(padded_points(64, 1.5) == 96);
    CHECK(padded_points(16, 1.0) == 16);
    CHECK(padded_points(10, 1.25) % 2 == 0);
}

TEST_CASE("nonlinearity basics") {
    const TorusGrid g(2, 16);
    CHECK(lp_norm(nonlinearity(RealField(g), 3.0), 2.0) == 0.0);
    const RealField two(g, std::vector<double>(g.size(), 2.0));
    const RealField cube = nonlinearity(two, 3.0);
    for (double x : cube.samples()) CHECK(x == doctest::Approx(8.0).epsilon(1e-14));

    const RealField f = random_smooth_field(g, 4, 5.0);
    for (double r : {2.0, 3.0, 3.5}) {
        const RealField plus = nonlinearity(f, r);
        const RealField minus = nonlinearity(-1.0 * f, r);
        CHECK(lp_norm(plus + minus, 2.0) <= 1e-14 * lp_norm(plus, 2.0));
    }
}

TEST_CASE("padded samples match the fine-grid function") {
    const TorusGrid g(1, 16);
    const double factor = 1.5;
    const std::size_t M = padded_points(16, factor);
    const TorusGrid fine(1, 32);
    for (long k : {1L, 5L, 8L}) {
        const std::vector<long> kv{k};
        const auto samples = padded_samples(forward_transform(cosine_mode(g, kv, 1.0, 0.0)), factor);
        REQUIRE(samples.size() == M);
        for (std::size_t i = 0; i < M; ++i) {
            const double x = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(M);
            CHECK(std::abs(samples[i] - std::cos(static_cast<double>(k) * x)) < 1e-13);
        }
        const auto back = truncate_to_band(samples, g, factor);
        const auto original = forward_transform(cosine_mode(g, kv, 1.0, 0.0));
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(back[i] - original[i]) < 1e-13);
    }
}

TEST_CASE("dealiased cube of a cosine is exact") {
    const TorusGrid g(1, 16);
    const std::vector<long> k1{1};
    const std::vector<long> k3{3};
    const RealField u = cosine_mode(g, k1);
    const RealField expected = 0.75 * cosine_mode(g, k1) + 0.25 * cosine_mode(g, k3);
    CHECK(lp_norm(nonlinearity(u, 3.0) - expected, std::numeric_limits<double>::infinity()) < 1e-14);
}

TEST_CASE("r = 2 matches the pointwise product on the fine grid") {
    const TorusGrid g(1, 32);
    const std::vector<long> k{3};
    const RealField u = cosine_mode(g, k, 0.7, 0.2);
    const double factor = 1.5;
    const std::size_t M = padded_points(32, factor);
    std::vector<double> brute(M);
    for (std::size_t i = 0; i < M; ++i) {
        const double x = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(M);
        const double value = 0.7 * std::cos(3.0 * x + 0.2);
        brute[i] = std::abs(value) * value;
    }
    const SpectralField expected = truncate_to_band(brute, g, factor);
    const SpectralField actual = nonlinearity(forward_transform(u), 2.0, factor);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(actual[i] - expected[i]) < 1e-12);
}

TEST_CASE("Duhamel integral") {
    const TorusGrid g(1, 32);
    const ModelParams m{2.0, 3.0, 1};
    const auto times = make_time_grid(config(0.5));

    SUBCASE("zero forcing gives the semigroup") {
        const auto u0 = forward_transform(random_smooth_field(g, 1, 10.0));
        std::vector<SpectralField> forcing(times.size() + 1, SpectralField(g));
        const auto out = duhamel_integrate(u0, forcing, times, 2, m);
        for (std::size_t i = 0; i < times.size(); ++i) {
            const auto exact = apply_semigroup(u0, times[i], m);
            CHECK((out[i] - exact).l2() <= 1e-13 * u0.l2());
        }
    }
    SUBCASE("constant forcing on the mean grows linearly") {
        const RealField c(g, std::vector<double>(g.size(), 0.5));
        const SpectralField n = nonlinearity(forward_transform(c), 3.0);
        std::vector<SpectralField> forcing(times.size() + 1, n);
        const auto out = duhamel_integrate(SpectralField(g), forcing, times, 2, m);
        for (std::size_t i = 0; i < times.size(); i += 17) {
            const RealField value = inverse_transform(out[i]);
            CHECK(value[3] == doctest::Approx(0.125 * times[i]).epsilon(1e-13));
        }
    }
    SUBCASE("linear-in-time forcing matches the closed form") {
        const RealField f = random_smooth_field(g, 2, 12.0);
        const SpectralField fh = forward_transform(f);
        std::vector<SpectralField> forcing{SpectralField(g)};
        for (double t : times) forcing.push_back(t * fh);
        const auto out = duhamel_integrate(SpectralField(g), forcing, times, 2, m);
        const auto symbol = dissipation_symbol(g, m.alpha);
        for (std::size_t i = 0; i < times.size(); i += 7) {
            const double t = times[i];
            for (std::size_t k = 0; k < g.size(); ++k) {
                const double lambda = symbol[k];
                const double weight = lambda == 0.0 ? 0.5 * t * t
                                                    : (lambda * t - 1.0 + std::exp(-lambda * t)) / (lambda * lambda);
                CHECK(std::abs(out[i][k] - weight * fh[k]) <= 1e-10 * std::max(1.0, std::abs(weight * fh[k])));
            }
        }
    }
    SUBCASE("argument checks") {
        std::vector<SpectralField> short_forcing(times.size(), SpectralField(g));
        CHECK_THROWS_AS(duhamel_integrate(SpectralField(g), short_forcing, times, 2, m), ParameterError);
        std::vector<SpectralField> forcing(times.size() + 1, SpectralField(g));
        CHECK_THROWS_AS(duhamel_integrate(SpectralField(g), forcing, times, 3, m), ParameterError);
        const TorusGrid other(1, 64);
        const Trajectory traj(std::vector<double>{0.1, 0.2}, {RealField(other), RealField(other)});
        CHECK_THROWS_AS(duhamel_apply(RealField(g), traj, config(0.2), m), ParameterError);
    }
}

TEST_CASE("Picard iteration") {
    const TorusGrid g(2, 32);

    SUBCASE("zero data") {
        const auto report = picard_solve(RealField(g), config(0.25), kHeat, weight(0.25), kSpace);
        CHECK(report.converged);
        CHECK(report.iterations == 1);
        for (const auto& f : report.trajectory->fields()) CHECK(lp_norm(f, std::numeric_limits<double>::infinity()) == 0.0);
    }
    SUBCASE("small data agrees with the exponential integrator") {
        const RealField u0 = demo(g, 1e-3);
        const auto cfg = config(0.25);
        const auto report = picard_solve(u0, cfg, kHeat, weight(0.25), kSpace);
        REQUIRE(report.converged);
        for (double q : report.contraction_factors) CHECK(q < 0.1);
        CHECK(report.distances.back() <= cfg.picard_tol);
        const auto oracle = etd_oracle(u0, cfg, kHeat);
        const auto& u = *report.trajectory;
        CHECK(lp_norm(u.field(u.size() - 1) - oracle.field(oracle.size() - 1), 2.0) <
              1e-6 * lp_norm(u.field(u.size() - 1), 2.0));
        const auto image = duhamel_apply(u0, u, cfg, kHeat);
        for (std::size_t i = 0; i < u.size(); i += 11) {
            CHECK(lp_norm(image.field(i) - u.field(i), 2.0) <= 2.0 * cfg.picard_tol * lp_norm(u.field(i), 2.0));
        }
        CHECK(pde_residual(u, kHeat) < 1e-4);
    }
    SUBCASE("odd symmetry") {
        const RealField u0 = demo(g, 0.4);
        const auto plus = picard_solve(u0, config(0.1), kHeat, weight(0.1), kSpace);
        const auto minus = picard_solve(-1.0 * u0, config(0.1), kHeat, weight(0.1), kSpace);
        const auto& a = *plus.trajectory;
        const auto& b = *minus.trajectory;
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(lp_norm(a.field(i) + b.field(i), 2.0) <= 1e-12 * lp_norm(a.field(i), 2.0));
        }
    }
    SUBCASE("halving T reduces the contraction factor") {
        const RealField u0 = demo(g, 1.0);
        const auto full = picard_solve(u0, config(0.2), kHeat, weight(0.2), kSpace);
        const auto half = picard_solve(u0, config(0.1), kHeat, weight(0.1), kSpace);
        REQUIRE(!full.contraction_factors.empty());
        REQUIRE(!half.contraction_factors.empty());
        CHECK(half.contraction_factors.front() < full.contraction_factors.front());
    }
    SUBCASE("large data is flagged") {
        const RealField u0 = demo(g, 10.0);
        try {
            picard_solve(u0, config(1.0), kHeat, weight(1.0), kSpace);
            FAIL("expected divergence");
        } catch (const BlowupSuspected& e) {
            CHECK(e.report().iterations >= 1);
            CHECK_FALSE(e.report().converged);
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(picard_solve(demo(g, 1e-3), config(0.25), kHeat, weight(0.5), kSpace), ParameterError);
        CHECK_THROWS_AS(picard_solve(demo(g, 1e-3), config(0.25), kHeat, TimeWeight{1.0 / 6.0, 1.0, 0.25}, kSpace),
                        ParameterError);
        CHECK_THROWS_AS(picard_solve(demo(g, 1e-3), config(0.25), kHeat, weight(0.25), kSpace.with_smoothness(0.9)),
                        ParameterError);
        CHECK_THROWS_AS(picard_solve(RealField(TorusGrid(1, 32)), config(0.25), kHeat, weight(0.25), kSpace),
                        ParameterError);
    }
}

TEST_CASE("exponential integrator") {
    const TorusGrid g(2, 32);
    SUBCASE("zero data stays zero") {
        const auto traj = etd_oracle(RealField(g), config(0.1), kHeat);
        for (const auto& f : traj.fields()) CHECK(lp_norm(f, std::numeric_limits<double>::infinity()) == 0.0);
    }
    SUBCASE("linear problem is exact") {
        const RealField u0 = random_smooth_field(g, 6, 10.0);
        const ModelParams m{3.0, 3.0, 2};
        const auto traj = etd_oracle(u0, config(0.05), m, false);
        for (std::size_t i = 0; i < traj.size(); ++i) {
            const RealField exact = apply_semigroup(u0, traj.time(i), m);
            CHECK(lp_norm(traj.field(i) - exact, std::numeric_limits<double>::infinity()) <= 1e-12 * lp_norm(u0, std::numeric_limits<double>::infinity()));
        }
    }
    SUBCASE("second-order self-convergence") {
        const RealField u0 = demo(g, 0.8);
        std::vector<RealField> finals;
        for (std::size_t slabs : {16u, 32u, 64u}) {
            SolverConfig c = config(0.2, slabs);
            c.time_grid = TimeGridKind::uniform;
            const auto traj = etd_oracle(u0, c, kHeat);
            finals.push_back(traj.field(traj.size() - 1));
        }
        const double coarse = lp_norm(finals[0] - finals[1], 2.0);
        const double fine = lp_norm(finals[1] - finals[2], 2.0);
        CHECK(std::log2(coarse / fine) == doctest::Approx(2.0).epsilon(0.15));
    }
    SUBCASE("instability is reported with its step") {
        SolverConfig c = config(1.0, 4);
        c.time_grid = TimeGridKind::uniform;
        try {
            etd_oracle(demo(g, 50.0), c, kHeat);
            FAIL("expected instability");
        } catch (const InstabilityError& e) {
            CHECK(e.step() < 4);
            CHECK(e.time() > 0.0);
        }
    }
}

TEST_CASE("PDE residual") {
    const TorusGrid g(1, 32);
    const ModelParams m{2.0, 3.0, 1};
    auto exact_mode = [&](std::size_t slabs) {
        SolverConfig c = config(0.01, slabs);
        c.time_grid = TimeGridKind::uniform;
        std::vector<RealField> fields;
        const auto times = make_time_grid(c);
        const std::vector<long> k{2};
        for (double t : times) fields.push_back(std::exp(-t * 16.0) * cosine_mode(g, k));
        return pde_residual(Trajectory(times, fields), m, 1.5, false);
    };
    const double coarse = exact_mode(16);
    const double fine = exact_mode(32);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
    CHECK(fine < 1e-3);

    const Trajectory zero({0.1, 0.2, 0.3}, {RealField(g), RealField(g), RealField(g)});
    CHECK(pde_residual(zero, m) == 0.0);
    const Trajectory short_traj({0.1, 0.2}, {RealField(g), RealField(g)});
    CHECK_THROWS_AS(pde_residual(short_traj, m), ParameterError);
}

TEST_CASE("strong convergence to the initial data") {
    const TorusGrid g(2, 32);
    const auto zero = picard_solve(RealField(g), config(0.1), kHeat, weight(0.1), kSpace);
    for (const auto& [t, d] : strong_convergence_check(*zero.trajectory, RealField(g), kSpace)) CHECK(d == 0.0);

    const RealField u0 = demo(g, 0.2);
    const auto report = picard_solve(u0, config(1.0 / 32.0), kHeat, weight(1.0 / 32.0), kSpace);
    const auto& u = *report.trajectory;
    const auto distances = strong_convergence_check(u, u0, kSpace);
    double previous = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= 6; ++m) {
        const std::size_t i = u.find(std::ldexp(1.0 / 32.0, -m));
        REQUIRE(i < u.size());
        CHECK(distances[i].second < previous);
        if (m > 3) CHECK(previous / distances[i].second == doctest::Approx(2.0).epsilon(0.05));
        previous = distances[i].second;
    }
}

TEST_CASE("contraction identity") {
    CHECK(contraction_identity_defect(0.7, 0.7, 3.0) == 0.0);
    CHECK(contraction_identity_defect(1.0, -1.0, 2.0) < 1e-15);
    const TorusGrid g(2, 32);
    const RealField u = random_smooth_field(g, 1, 8.0, 1.0, 2.0);
    const RealField v = random_smooth_field(g, 2, 8.0, 1.0, 2.0);
    CHECK(contraction_identity_check(u, u, 3.0) == 0.0);
    for (double r : {2.0, 3.0, 3.5}) CHECK(contraction_identity_check(u, v, r) < 1e-10);
}
