#pragma once

#include <optional>
#include <vector>

#include "movingbox/operators.hpp"
#include "movingbox/wavefield.hpp"

namespace movingbox {

enum class Side { Left, Right };

/// <H(l)> under trapezoidal quadrature (real part of the banded quadratic
/// form; the imaginary part is roundoff for a Hermitian operator).
double energy(const WaveField& phi, double l, const PhysicalConstants& consts = {});

/// <V(l xi + d, t)> for a fixed-frame state.
double potential_energy(const WaveField& phi, const Kinematics& kin, double t,
                        const PotentialSpec& pot);

/// Derivative of the field at a wall from the one-sided three-point stencil
/// anchored on the implicit boundary zero; second-order in the spacing.
cplx boundary_derivative(const WaveField& phi, Side side);

/// Contact-term energy rate in the fixed frame:
///   -(hbar^2 / 2 m l^3) * [ (ldot xi + ddot) |phi'(xi)|^2 ] at xi = +-1/2.
double energy_rate_fixed_frame(const WaveField& phi, const WallSchedule& schedule, double t,
                               const PhysicalConstants& consts = {});

/// Wall derivatives of the moving-frame field.
struct BoundaryDerivs {
    cplx dpsi_a;
    cplx dpsi_b;
};

/// Moving-frame form -(hbar^2 / 2 m) [ bdot |psi'(b)|^2 - adot |psi'(a)|^2 ].
/// Equal to the fixed-frame expression under phi' = l^{3/2} psi'.
double energy_rate_moving_frame(const BoundaryDerivs& derivs, const WallSchedule& schedule,
                                double t, const PhysicalConstants& consts = {});

/// <dV/dt> evaluated in the moving frame at the node images; exactly zero
/// for potentials flagged static.
double energy_rate_potential_term(const WaveField& phi, const WallSchedule& schedule, double t,
                                  const PotentialSpec& pot);

/// Total rate of <H + V>: boundary contact terms plus the potential term.
double energy_rate_with_potential(const WaveField& phi, const WallSchedule& schedule, double t,
                                  const PotentialSpec& pot, const PhysicalConstants& consts = {});

/// One diagnostics row. rate_fd is filled by finalize_fd_rates once both
/// neighbors exist; energy_total doubles as plain energy when no potential
/// is installed, and rate_fd always differences energy_total.
struct DiagnosticsRecord {
    double t = 0.0;
    double norm = 0.0;
    double energy = 0.0;
    double energy_total = 0.0;
    double rate_boundary = 0.0;
    std::optional<double> rate_fd;
    double rate_potential = 0.0;
    cplx dphi_left;
    cplx dphi_right;
};

DiagnosticsRecord make_record(const WaveField& phi, const WallSchedule& schedule, double t,
                              const PotentialSpec* potential = nullptr,
                              const PhysicalConstants& consts = {});

/// Centered finite difference of energy_total across adjacent snapshots;
/// first and last rows stay absent.
void finalize_fd_rates(std::vector<DiagnosticsRecord>& records);

}
