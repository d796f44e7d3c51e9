#include "movingbox/gauge.hpp"

#include <cmath>

#include "movingbox/errors.hpp"
#include "movingbox/potential.hpp"
#include "movingbox/propagator.hpp"

namespace movingbox {

WaveField gauge_transform(const WaveField& phi, double t, double g,
                          const PhysicalConstants& consts) {
    if (phi.frame != Frame::FixedBox)
        throw ValidationError("gauge_transform: expected a fixed-frame field");
    WaveField chi = phi;
    const double m = consts.mass;
    const double global = -m * g * g * t * t * t / 6.0;
    for (std::size_t j = 0; j < chi.amps.size(); ++j) {
        const double theta = (m * g * phi.grid.node(j) * t + global) / consts.hbar;
        chi.amps[j] *= cplx{std::cos(theta), std::sin(theta)};
    }
    return chi;
}

double evolve_elevator_check(const WaveField& phi0, double g, double t_final, double dt,
                             const PhysicalConstants& consts) {
    const auto n_steps = static_cast<std::size_t>(std::llround(t_final / dt));

    // G(t) maps the falling box, d = -g t^2 / 2, onto the static field
    // -m g x: a downward pseudo-force appears in the frame of an elevator
    // accelerating downward. The opposite pairing leaves a residual
    // e^{2 i m g t xi / hbar} twist and the overlap stalls near 0.99.
    const WallSchedule accelerated = WallSchedule::uniform_acceleration(1.0, 0.0, -g);
    WaveField phi_a = phi0;
    for (std::size_t k = 0; k < n_steps; ++k) {
        phi_a = step(phi_a, accelerated, dt, nullptr, consts);
        phi_a.time = phi0.time + static_cast<double>(k + 1) * dt;
    }

    const WallSchedule fixed = WallSchedule::static_box(1.0, 0.0);
    const PotentialSpec field = linear_potential(-consts.mass * g);
    WaveField phi_b = phi0;
    for (std::size_t k = 0; k < n_steps; ++k) {
        phi_b = step(phi_b, fixed, dt, &field, consts);
        phi_b.time = phi0.time + static_cast<double>(k + 1) * dt;
    }

    const WaveField chi = gauge_transform(phi_a, phi_a.time, g, consts);
    const double na = chi.norm();
    const double nb = phi_b.norm();
    return std::abs(inner(phi_b, chi)) / (na * nb);
}

}
