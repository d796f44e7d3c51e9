#pragma once

#include <optional>
#include <string>
#include <vector>

#include "movingbox/interp.hpp"

namespace movingbox {

enum class ScheduleKind {
    Static,
    LinearTranslation,
    UniformAcceleration,
    LinearExpansion,
    SinusoidalExpansion,
    Tabulated,
};

std::string to_string(ScheduleKind kind);

/// Width, center and their time derivatives at one instant.
struct Kinematics {
    double l = 1.0;
    double d = 0.0;
    double ldot = 0.0;
    double ddot = 0.0;
};

/// Wall positions a = d - l/2, b = d + l/2 and their velocities.
struct WallState {
    double a = 0.0;
    double b = 0.0;
    double adot = 0.0;
    double bdot = 0.0;
};

/// Prescribed wall motion t -> (l(t), d(t)). Analytic kinds carry exact
/// derivatives; tabulated data is interpolated by a natural cubic spline
/// and differentiated through the interpolant.
class WallSchedule {
public:
    static WallSchedule static_box(double l0, double d0 = 0.0);
    static WallSchedule linear_translation(double l0, double d0, double v);
    static WallSchedule uniform_acceleration(double l0, double d0, double g);
    /// pin_left_wall switches the center motion to d = l/2 so the left wall
    /// stays at the origin while the right wall recedes (the one-sided
    /// accelerator geometry). d0 must be zero in that case.
    static WallSchedule linear_expansion(double l0, double v, double d0 = 0.0,
                                         bool pin_left_wall = false);
    static WallSchedule sinusoidal_expansion(double l0, double amplitude, double omega,
                                             double d0 = 0.0);
    /// Columns t (strictly increasing), l, and optionally d (zeros if absent).
    static WallSchedule tabulated(std::vector<double> t, std::vector<double> l,
                                  std::vector<double> d = {});

    /// Throws WallCollision if l(t) < l_min; OutOfWindow outside tabulated range.
    Kinematics evaluate(double t) const;
    WallState wall_positions(double t) const;

    ScheduleKind kind() const { return kind_; }

    double l_min() const { return l_min_; }
    void set_l_min(double v) { l_min_ = v; }

    /// Kind parameters in declaration order (for config echo and tests).
    double l0 = 1.0, d0 = 0.0, v = 0.0, g = 0.0, omega = 0.0, amplitude = 0.0;
    bool pin_left_wall = false;

private:
    WallSchedule() = default;

    ScheduleKind kind_ = ScheduleKind::Static;
    double l_min_ = 1e-6;
    std::optional<CubicSpline> table_l_, table_d_;
};

}
