#pragma once

#include <cstddef>
#include <vector>

#include "movingbox/grid.hpp"

namespace movingbox {

/// Natural cubic spline through strictly increasing sample points.
/// Evaluation outside the sample window clamps to the end values
/// (derivative zero there); callers that must reject out-of-window
/// arguments check the range themselves.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double value(double x) const;
    double derivative(double x) const;

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }

private:
    std::size_t segment(double x) const;

    std::vector<double> x_, y_, m_;  // m_: second derivatives at the knots
};

/// Local 4-point (cubic Lagrange) interpolation of complex samples on a
/// uniform grid. Two source layouts are supported:
///
///  - DirichletInterior: values are the interior nodes of an interval whose
///    endpoints carry implicit zeros; x0 is the first interior node.
///    Evaluation outside the closed interval returns 0.
///  - Periodic: values wrap around with period n*dx; x0 is node 0.
enum class SampleLayout { DirichletInterior, Periodic };

cplx sample_cubic(const std::vector<cplx>& values, double x0, double dx, SampleLayout layout,
                  double x);

}
