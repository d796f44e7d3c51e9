#pragma once

#include <functional>
#include <vector>

#include "movingbox/observables.hpp"
#include "movingbox/potential.hpp"
#include "movingbox/schedule.hpp"
#include "movingbox/wavefield.hpp"

namespace movingbox {

enum class Method { CrankNicolson, Zeno };

struct PropagatorConfig {
    double dt = 1e-4;
    double t_final = 1.0;
    std::size_t snapshot_stride = 10;
    Method method = Method::CrankNicolson;

    // Zeno-only knobs.
    std::size_t zeno_slices = 64;
    double line_box_halfwidth = 4.0;  // line box [-h, h]
    std::size_t line_grid_points = 4096;
    double max_discarded = 0.5;
};

/// Map a moving-frame field onto the fixed grid:
///   phi(xi) = sqrt(l) psi(l xi + d), cubic interpolation on psi's samples.
WaveField frame_map(const WaveField& psi, double l, double d);

/// Inverse map onto the interior nodes of [d - l/2, d + l/2]:
///   psi(x) = phi((x - d)/l) / sqrt(l).
WaveField frame_unmap(const WaveField& phi, double l, double d);

/// One implicit-midpoint (Cayley) step: exactly norm-preserving, second
/// order, with the operator frozen at t + dt/2.
WaveField step(const WaveField& phi, const WallSchedule& schedule, double dt,
               const PotentialSpec* potential = nullptr, const PhysicalConstants& consts = {});

struct PropagationResult {
    WaveField state;
    std::vector<DiagnosticsRecord> records;
};

/// Called at every emitted snapshot, before rate_fd is finalized.
using SnapshotObserver = std::function<void(const WaveField&, const DiagnosticsRecord&)>;

/// Crank-Nicolson drive from phi0.time over round(t_final/dt) steps,
/// recording diagnostics every snapshot_stride steps (plus the initial and
/// final instants).
PropagationResult propagate(const WaveField& phi0, const WallSchedule& schedule,
                            const PropagatorConfig& config,
                            const PotentialSpec* potential = nullptr,
                            const PhysicalConstants& consts = {},
                            const SnapshotObserver& observer = {});

}
