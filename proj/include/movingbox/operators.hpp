#pragma once

#include "movingbox/banded.hpp"
#include "movingbox/grid.hpp"
#include "movingbox/potential.hpp"
#include "movingbox/schedule.hpp"

namespace movingbox {

inline constexpr double kDefaultLMin = 1e-6;

/// Kinetic operator hbar^2/(2 m l^2) * (three-point Dirichlet Laplacian).
/// Entries scale exactly as l^-2.
HermitianBanded assemble_kinetic(const FixedGrid& grid, double l,
                                 const PhysicalConstants& consts = {},
                                 double l_min = kDefaultLMin);

/// Momentum p = -i hbar * (central difference).
HermitianBanded assemble_momentum(const FixedGrid& grid, const PhysicalConstants& consts = {});

/// Symmetrized product (x p + p x)/2, built at the matrix level from the
/// node positions and the central-difference momentum; exactly Hermitian.
HermitianBanded assemble_virial(const FixedGrid& grid, const PhysicalConstants& consts = {});

/// Wall-motion generator K = -(ldot/l) (x p + p x)/2 - (ddot/l) p.
HermitianBanded assemble_generator(const FixedGrid& grid, const Kinematics& kin,
                                   const PhysicalConstants& consts = {},
                                   double l_min = kDefaultLMin);

/// Full fixed-frame operator H(l) + K(l, d) [+ V(l xi + d, t) on the diagonal].
HermitianBanded assemble_full(const FixedGrid& grid, const WallSchedule& schedule, double t,
                              const PotentialSpec* potential = nullptr,
                              const PhysicalConstants& consts = {});

}
