#pragma once

#include <functional>
#include <string>
#include <vector>

#include "movingbox/grid.hpp"

namespace movingbox {

/// External potential V(x, t) given in the moving (physical) frame.
/// time_derivative is optional; a positive fd_time_step enables a centered
/// finite difference in t as a fallback. Static potentials short-circuit
/// dV/dt to exactly zero.
struct PotentialSpec {
    std::function<double(double x, double t)> value;
    std::function<double(double x, double t)> time_derivative;
    bool is_static = false;
    double fd_time_step = 0.0;
    std::string description;

    double operator()(double x, double t) const { return value(x, t); }

    /// Throws MissingTimeDerivative when no analytic derivative or finite
    /// difference step is available for a time-dependent potential.
    double dvdt(double x, double t) const;
};

PotentialSpec linear_potential(double slope, double offset = 0.0);
PotentialSpec harmonic_potential(double k, double x0 = 0.0);
/// Static potential from (x, V) samples, cubic-spline interpolated and
/// extended flat beyond the sample window.
PotentialSpec table_potential(std::vector<double> x, std::vector<double> v);

/// The potential as seen from the fixed box: Vt(xi, t) = V(l*xi + d, t).
/// Composition only; the unitary frame change leaves multiplication
/// operators as multiplication by the composed function.
std::function<double(double xi, double t)> transform_potential(const PotentialSpec& pot, double l,
                                                               double d);

}
