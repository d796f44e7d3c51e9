#include "movingbox/schedule.hpp"

#include <cmath>

#include "movingbox/errors.hpp"

namespace movingbox {

std::string to_string(ScheduleKind kind) {
    switch (kind) {
        case ScheduleKind::Static: return "static";
        case ScheduleKind::LinearTranslation: return "linear_translation";
        case ScheduleKind::UniformAcceleration: return "uniform_acceleration";
        case ScheduleKind::LinearExpansion: return "linear_expansion";
        case ScheduleKind::SinusoidalExpansion: return "sinusoidal_expansion";
        case ScheduleKind::Tabulated: return "tabulated";
    }
    return "unknown";
}

WallSchedule WallSchedule::static_box(double l0, double d0) {
    WallSchedule s;
    s.kind_ = ScheduleKind::Static;
    s.l0 = l0;
    s.d0 = d0;
    return s;
}

WallSchedule WallSchedule::linear_translation(double l0, double d0, double v) {
    WallSchedule s;
    s.kind_ = ScheduleKind::LinearTranslation;
    s.l0 = l0;
    s.d0 = d0;
    s.v = v;
    return s;
}

WallSchedule WallSchedule::uniform_acceleration(double l0, double d0, double g) {
    WallSchedule s;
    s.kind_ = ScheduleKind::UniformAcceleration;
    s.l0 = l0;
    s.d0 = d0;
    s.g = g;
    return s;
}

WallSchedule WallSchedule::linear_expansion(double l0, double v, double d0, bool pin_left_wall) {
    if (pin_left_wall && d0 != 0.0)
        throw ValidationError("linear_expansion: pin_left_wall fixes the center at l/2, d0 must be 0");
    WallSchedule s;
    s.kind_ = ScheduleKind::LinearExpansion;
    s.l0 = l0;
    s.d0 = d0;
    s.v = v;
    s.pin_left_wall = pin_left_wall;
    return s;
}

WallSchedule WallSchedule::sinusoidal_expansion(double l0, double amplitude, double omega,
                                                double d0) {
    WallSchedule s;
    s.kind_ = ScheduleKind::SinusoidalExpansion;
    s.l0 = l0;
    s.d0 = d0;
    s.amplitude = amplitude;
    s.omega = omega;
    return s;
}

WallSchedule WallSchedule::tabulated(std::vector<double> t, std::vector<double> l,
                                     std::vector<double> d) {
    if (d.empty()) d.assign(t.size(), 0.0);
    if (t.size() != l.size() || t.size() != d.size())
        throw ValidationError("tabulated schedule: column lengths differ");
    WallSchedule s;
    s.kind_ = ScheduleKind::Tabulated;
    s.table_l_.emplace(t, std::move(l));
    s.table_d_.emplace(std::move(t), std::move(d));
    return s;
}

Kinematics WallSchedule::evaluate(double t) const {
    Kinematics k;
    switch (kind_) {
        case ScheduleKind::Static:
            k = {l0, d0, 0.0, 0.0};
            break;
        case ScheduleKind::LinearTranslation:
            k = {l0, d0 + v * t, 0.0, v};
            break;
        case ScheduleKind::UniformAcceleration:
            k = {l0, d0 + 0.5 * g * t * t, 0.0, g * t};
            break;
        case ScheduleKind::LinearExpansion: {
            const double l = l0 + v * t;
            if (pin_left_wall)
                k = {l, 0.5 * l, v, 0.5 * v};
            else
                k = {l, d0, v, 0.0};
            break;
        }
        case ScheduleKind::SinusoidalExpansion:
            k = {l0 + amplitude * std::sin(omega * t), d0, amplitude * omega * std::cos(omega * t),
                 0.0};
            break;
        case ScheduleKind::Tabulated: {
            if (t < table_l_->x_front() || t > table_l_->x_back())
                throw OutOfWindow("tabulated schedule: t = " + std::to_string(t) +
                                  " outside sample window [" + std::to_string(table_l_->x_front()) +
                                  ", " + std::to_string(table_l_->x_back()) + "]");
            k = {table_l_->value(t), table_d_->value(t), table_l_->derivative(t),
                 table_d_->derivative(t)};
            break;
        }
    }
    if (!(k.l >= l_min_))
        throw WallCollision("wall separation l = " + std::to_string(k.l) + " at t = " +
                            std::to_string(t) + " fell below l_min = " + std::to_string(l_min_));
    return k;
}

WallState WallSchedule::wall_positions(double t) const {
    const Kinematics k = evaluate(t);
    return {k.d - 0.5 * k.l, k.d + 0.5 * k.l, k.ddot - 0.5 * k.ldot, k.ddot + 0.5 * k.ldot};
}

}
