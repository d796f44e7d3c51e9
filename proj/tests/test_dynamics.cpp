// Time stepping: exact Cayley phases on stationary states, unitarity, two-
// level revivals, exact time reversal, adiabatic following, the equivalence
// of the accelerated box with a uniform field, and the frame maps.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "movingbox/errors.hpp"
#include "movingbox/gauge.hpp"
#include "movingbox/observables.hpp"
#include "movingbox/propagator.hpp"
#include "movingbox/wavefield.hpp"

using namespace movingbox;
using std::numbers::pi;

namespace {

double fidelity(const WaveField& a, const WaveField& b) {
    return std::abs(inner(a, b)) / (a.norm() * b.norm());
}

// Discrete Dirichlet-Laplacian eigenvalue for unit constants and width l.
double discrete_level(std::size_t n_cells, int n, double l = 1.0) {
    const double dxi = 1.0 / static_cast<double>(n_cells);
    return (1.0 - std::cos(n * pi * dxi)) / (dxi * dxi * l * l);
}

}  // namespace

TEST_CASE("one step multiplies a stationary state by the exact Cayley phase") {
    // For an eigenvector, Crank-Nicolson reduces to the scalar rational map
    // (1 - i dt lambda / 2) / (1 + i dt lambda / 2): a pure phase.
    const std::size_t n_cells = 256;
    const FixedGrid grid(n_cells);
    const WallSchedule s = WallSchedule::static_box(1.0);
    const WaveField mode = eigenmode(grid, 3);
    const double dt = 1e-3;
    const double lambda = discrete_level(n_cells, 3);

    const WaveField stepped = step(mode, s, dt);
    const cplx phase = (cplx{1.0, -0.5 * dt * lambda}) / (cplx{1.0, 0.5 * dt * lambda});
    double max_err = 0.0;
    for (std::size_t j = 0; j < mode.amps.size(); ++j)
        max_err = std::max(max_err, std::abs(stepped.amps[j] - phase * mode.amps[j]));
    CHECK(max_err < 1e-12);

    // And the phase agrees with exp(-i lambda dt) to third order in dt.
    const cplx exact = std::exp(cplx{0.0, -lambda * dt});
    CHECK(std::abs(phase - exact) < std::pow(lambda * dt, 3) / 8.0);

    CHECK(stepped.norm() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(stepped.time == doctest::Approx(dt));
}

TEST_CASE("step rejects moving-frame input") {
    const FixedGrid grid(64);
    const WaveField psi(grid, Frame::MovingWall, 0.0, 1.3, 0.2);
    CHECK_THROWS_AS(step(psi, WallSchedule::static_box(1.0), 1e-3), ValidationError);
}

TEST_CASE("norm is preserved through a breathing-box run") {
    const FixedGrid grid(128);
    const WallSchedule s = WallSchedule::sinusoidal_expansion(2.0, 1.0, 1.0);
    PropagatorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 1.0;
    cfg.snapshot_stride = 50;
    const PropagationResult result = propagate(eigenmode(grid, 1), s, cfg);
    for (const auto& rec : result.records) CHECK(std::abs(rec.norm - 1.0) < 1e-12);
}

TEST_CASE("two-level superposition revives after 2 pi / (E2 - E1)") {
    const std::size_t n_cells = 256;
    const FixedGrid grid(n_cells);
    const WaveField m1 = eigenmode(grid, 1);
    const WaveField m2 = eigenmode(grid, 2);
    WaveField start(grid, Frame::FixedBox);
    for (std::size_t j = 0; j < start.amps.size(); ++j)
        start.amps[j] = (m1.amps[j] + m2.amps[j]) / std::sqrt(2.0);

    const double gap = discrete_level(n_cells, 2) - discrete_level(n_cells, 1);
    const double t_revival = 2.0 * pi / gap;
    PropagatorConfig cfg;
    cfg.t_final = t_revival;
    cfg.dt = t_revival / 4096.0;
    cfg.snapshot_stride = 4096;
    const PropagationResult result =
        propagate(start, WallSchedule::static_box(1.0), cfg);
    CHECK(fidelity(start, result.state) > 1.0 - 1e-4);
}

TEST_CASE("expansion runs reverse exactly under the conjugate trick") {
    // Complex conjugation flips the sign of the wall-motion generator, so
    // evolving conj(phi) under the time-reversed schedule and conjugating
    // again must land back on the initial state to solver roundoff.
    const FixedGrid grid(256);
    const double v = 0.05, t_final = 0.5;
    PropagatorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = t_final;
    cfg.snapshot_stride = 1u << 30;  // records only at the ends

    const WaveField start = eigenmode(grid, 1);
    const PropagationResult fwd =
        propagate(start, WallSchedule::linear_expansion(1.0, v), cfg);

    WaveField back = fwd.state;
    back.time = 0.0;
    for (auto& a : back.amps) a = std::conj(a);
    const PropagationResult rev =
        propagate(back, WallSchedule::linear_expansion(1.0 + v * t_final, -v), cfg);

    WaveField round_trip = rev.state;
    for (auto& a : round_trip.amps) a = std::conj(a);
    round_trip.time = start.time;
    CHECK(fidelity(start, round_trip) > 1.0 - 1e-9);
}

TEST_CASE("slow expansion keeps the state in the instantaneous ground state") {
    const std::size_t n_cells = 256;
    const FixedGrid grid(n_cells);
    const double v = 0.01;
    PropagatorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 1.0;
    cfg.snapshot_stride = 1000;
    const PropagationResult result =
        propagate(eigenmode(grid, 1), WallSchedule::linear_expansion(1.0, v), cfg);

    // The discrete instantaneous ground vector is l-independent; only its
    // eigenvalue scales, by l^-2.
    const double population = std::pow(fidelity(eigenmode(grid, 1), result.state), 2);
    CHECK(population > 0.99);

    const double l_end = 1.0 + v * cfg.t_final;
    const double expect = discrete_level(n_cells, 1, l_end);
    CHECK(energy(result.state, l_end) == doctest::Approx(expect).epsilon(1e-2));
}

TEST_CASE("accelerated box equals static box plus uniform field") {
    const FixedGrid grid(256);
    const WaveField mode = eigenmode(grid, 1);

    // g = 0 makes the two routes literally the same propagator.
    CHECK(evolve_elevator_check(mode, 0.0, 0.2, 1e-3) == doctest::Approx(1.0).epsilon(1e-12));

    // g = 1: fidelity approaches 1 as dt shrinks.
    const double f4 = evolve_elevator_check(mode, 1.0, 0.5, 4e-3);
    const double f2 = evolve_elevator_check(mode, 1.0, 0.5, 2e-3);
    const double f1 = evolve_elevator_check(mode, 1.0, 0.5, 1e-3);
    CHECK(f2 > f4);
    CHECK(f1 > f2);
    CHECK(f1 > 1.0 - 1e-6);
}

TEST_CASE("gauge transform is a pure phase") {
    const FixedGrid grid(128);
    const WaveField mode = eigenmode(grid, 2);
    const WaveField twisted = gauge_transform(mode, 0.7, 1.3);
    CHECK(twisted.norm() == doctest::Approx(mode.norm()).epsilon(1e-13));
    for (std::size_t j = 0; j < mode.amps.size(); ++j)
        CHECK(std::abs(twisted.amps[j]) == doctest::Approx(std::abs(mode.amps[j])).epsilon(1e-12));
}

TEST_CASE("total energy is conserved for static walls and potential") {
    const FixedGrid grid(128);
    const WallSchedule s = WallSchedule::static_box(1.0);
    const PotentialSpec pot = harmonic_potential(2.0);
    PropagatorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 0.2;
    cfg.snapshot_stride = 50;
    const PropagationResult result = propagate(eigenmode(grid, 1), s, cfg, &pot);
    const double e0 = result.records.front().energy_total;
    for (const auto& rec : result.records) CHECK(std::abs(rec.energy_total - e0) < 1e-10);
}

TEST_CASE("propagate emits the initial, stride, and final instants") {
    const FixedGrid grid(64);
    PropagatorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_final = 0.01;  // 10 steps
    cfg.snapshot_stride = 3;
    std::size_t observed = 0;
    const PropagationResult result =
        propagate(eigenmode(grid, 1), WallSchedule::static_box(1.0), cfg, nullptr, {},
                  [&](const WaveField&, const DiagnosticsRecord&) { ++observed; });

    const std::vector<double> expect = {0.0, 3e-3, 6e-3, 9e-3, 1e-2};
    REQUIRE(result.records.size() == expect.size());
    CHECK(observed == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k)
        CHECK(result.records[k].t == doctest::Approx(expect[k]).epsilon(1e-12));
    CHECK(!result.records.front().rate_fd.has_value());
    CHECK(!result.records.back().rate_fd.has_value());
    for (std::size_t k = 1; k + 1 < result.records.size(); ++k)
        CHECK(result.records[k].rate_fd.has_value());
    CHECK(result.state.time == doctest::Approx(0.01));
}

TEST_CASE("frame maps are mutually inverse on matching intervals") {
    const FixedGrid grid(512);
    const WaveField phi = eigenmode(grid, 2);
    const double l = 1.7, d = 0.3;
    const WaveField psi = frame_unmap(phi, l, d);
    CHECK(psi.frame == Frame::MovingWall);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));

    const WaveField round_trip = frame_map(psi, l, d);
    double max_err = 0.0;
    for (std::size_t j = 0; j < phi.amps.size(); ++j)
        max_err = std::max(max_err, std::abs(round_trip.amps[j] - phi.amps[j]));
    CHECK(max_err < 1e-10);
}

TEST_CASE("frame map interpolates across mismatched intervals") {
    // psi lives on [0.2 - 0.65, 0.2 + 0.65]; map it into the box of width
    // 1.5 centered at 0.1. Target points outside psi's interval must come
    // back exactly zero, interior points track the analytic profile.
    const FixedGrid grid(512);
    const double lp = 1.3, dp = 0.2;
    WaveField psi(grid, Frame::MovingWall, 0.0, lp, dp);
    auto profile = [&](double x) {
        const double a = dp - lp / 2.0;
        return std::sqrt(2.0 / lp) * std::sin(pi * (x - a) / lp);
    };
    for (std::size_t j = 0; j < psi.amps.size(); ++j) psi.amps[j] = profile(psi.node(j));

    const double l = 1.5, d = 0.1;
    const WaveField phi = frame_map(psi, l, d);
    const double a = dp - lp / 2.0, b = dp + lp / 2.0;
    double max_err = 0.0;
    for (std::size_t j = 0; j < phi.amps.size(); ++j) {
        const double x = l * grid.node(j) + d;
        if (x <= a || x >= b) {
            CHECK(phi.amps[j] == cplx{0.0, 0.0});
        } else {
            max_err = std::max(max_err,
                               std::abs(phi.amps[j] - std::sqrt(l) * profile(x)));
        }
    }
    CHECK(max_err < 1e-6);
}
