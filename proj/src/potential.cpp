#include "movingbox/potential.hpp"

#include <memory>

#include "movingbox/errors.hpp"
#include "movingbox/interp.hpp"

namespace movingbox {

double PotentialSpec::dvdt(double x, double t) const {
    if (is_static) return 0.0;
    if (time_derivative) return time_derivative(x, t);
    if (fd_time_step > 0.0) {
        const double h = fd_time_step;
        return (value(x, t + h) - value(x, t - h)) / (2.0 * h);
    }
    throw MissingTimeDerivative(
        "potential: dV/dt required but no analytic derivative or fd_time_step configured");
}

PotentialSpec linear_potential(double slope, double offset) {
    PotentialSpec p;
    p.value = [slope, offset](double x, double) { return slope * x + offset; };
    p.time_derivative = [](double, double) { return 0.0; };
    p.is_static = true;
    p.description = "linear";
    return p;
}

PotentialSpec harmonic_potential(double k, double x0) {
    PotentialSpec p;
    p.value = [k, x0](double x, double) { return 0.5 * k * (x - x0) * (x - x0); };
    p.time_derivative = [](double, double) { return 0.0; };
    p.is_static = true;
    p.description = "harmonic";
    return p;
}

PotentialSpec table_potential(std::vector<double> x, std::vector<double> v) {
    auto spline = std::make_shared<CubicSpline>(std::move(x), std::move(v));
    PotentialSpec p;
    p.value = [spline](double xx, double) { return spline->value(xx); };
    p.time_derivative = [](double, double) { return 0.0; };
    p.is_static = true;
    p.description = "custom-table";
    return p;
}

std::function<double(double, double)> transform_potential(const PotentialSpec& pot, double l,
                                                          double d) {
    auto value = pot.value;
    return [value, l, d](double xi, double t) { return value(l * xi + d, t); };
}

}
