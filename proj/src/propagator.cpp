#include "movingbox/propagator.hpp"

#include <cmath>
#include <string>

#include "movingbox/banded.hpp"
#include "movingbox/errors.hpp"
#include "movingbox/interp.hpp"
#include "movingbox/kernels.hpp"
#include "movingbox/operators.hpp"

namespace movingbox {

WaveField frame_map(const WaveField& psi, double l, double d) {
    if (psi.frame != Frame::MovingWall)
        throw ValidationError("frame_map: expected a moving-frame field");
    if (!(l >= kDefaultLMin)) throw WallCollision("frame_map: l below l_min");
    WaveField phi(psi.grid, Frame::FixedBox, psi.time);
    const double x0 = psi.node(0);
    const double dx = psi.spacing();
    const double root = std::sqrt(l);
    for (std::size_t j = 0; j < phi.amps.size(); ++j) {
        const double x = l * phi.grid.node(j) + d;
        phi.amps[j] = root * sample_cubic(psi.amps, x0, dx, SampleLayout::DirichletInterior, x);
    }
    return phi;
}

WaveField frame_unmap(const WaveField& phi, double l, double d) {
    if (phi.frame != Frame::FixedBox)
        throw ValidationError("frame_unmap: expected a fixed-frame field");
    if (!(l >= kDefaultLMin)) throw WallCollision("frame_unmap: l below l_min");
    WaveField psi(phi.grid, Frame::MovingWall, phi.time, l, d);
    const double x0 = phi.grid.node(0);
    const double dx = phi.grid.spacing();
    const double inv_root = 1.0 / std::sqrt(l);
    for (std::size_t j = 0; j < psi.amps.size(); ++j) {
        const double xi = (psi.node(j) - d) / l;
        psi.amps[j] =
            inv_root * sample_cubic(phi.amps, x0, dx, SampleLayout::DirichletInterior, xi);
    }
    return psi;
}

WaveField step(const WaveField& phi, const WallSchedule& schedule, double dt,
               const PotentialSpec* potential, const PhysicalConstants& consts) {
    if (phi.frame != Frame::FixedBox)
        throw ValidationError("step: expected a fixed-frame field");
    if (!(dt != 0.0) || !std::isfinite(dt)) throw ValidationError("step: dt must be finite and nonzero");

    const double t_mid = phi.time + 0.5 * dt;
    const HermitianBanded h = assemble_full(phi.grid, schedule, t_mid, potential, consts);
    const cplx c{0.0, 0.5 * dt / consts.hbar};  // i dt / (2 hbar)

    WaveField out(phi.grid, Frame::FixedBox, phi.time + dt);
    kernels::cayley_rhs(h, c, phi.amps, out.amps);
    BandedSystem lhs = BandedSystem::cayley_lhs(h, c);
    lhs.factorize();
    lhs.solve(out.amps);
    return out;
}

PropagationResult propagate(const WaveField& phi0, const WallSchedule& schedule,
                            const PropagatorConfig& config, const PotentialSpec* potential,
                            const PhysicalConstants& consts, const SnapshotObserver& observer) {
    if (phi0.frame != Frame::FixedBox)
        throw ValidationError("propagate: expected a fixed-frame initial state");
    if (!(config.dt > 0.0)) throw ValidationError("propagate: dt must be positive");
    if (config.t_final < 0.0) throw ValidationError("propagate: t_final must be nonnegative");
    if (config.snapshot_stride == 0) throw ValidationError("propagate: snapshot_stride must be positive");

    const auto n_steps = static_cast<std::size_t>(std::llround(config.t_final / config.dt));
    const double t0 = phi0.time;

    PropagationResult result{phi0, {}};
    auto emit = [&](const WaveField& state) {
        DiagnosticsRecord rec = make_record(state, schedule, state.time, potential, consts);
        result.records.push_back(rec);
        if (observer) observer(state, rec);
    };

    emit(result.state);
    for (std::size_t k = 1; k <= n_steps; ++k) {
        result.state = step(result.state, schedule, config.dt, potential, consts);
        result.state.time = t0 + static_cast<double>(k) * config.dt;  // avoid accumulation drift
        if (k % config.snapshot_stride == 0 || k == n_steps) emit(result.state);
    }
    finalize_fd_rates(result.records);
    return result;
}

}
