#pragma once

#include "movingbox/grid.hpp"
#include "movingbox/wavefield.hpp"

namespace movingbox {

/// Position-dependent phase twist for a uniformly accelerated box:
///   chi(xi) = exp( (i/hbar) (m g xi t - m g^2 t^3 / 6) ) phi(xi).
/// Norm-preserving by construction.
WaveField gauge_transform(const WaveField& phi, double t, double g,
                          const PhysicalConstants& consts = {});

/// Evolve phi0 two ways for t_final: (a) in the accelerated box via the
/// wall-motion generator, then gauge-twisted; (b) under the static box with
/// the uniform-field potential -m g x. Returns the overlap magnitude of the
/// two results; it converges to 1 at second order in dt.
double evolve_elevator_check(const WaveField& phi0, double g, double t_final, double dt,
                             const PhysicalConstants& consts = {});

}
