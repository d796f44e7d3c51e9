#include "movingbox/observables.hpp"

#include <cmath>

#include "movingbox/errors.hpp"
#include "movingbox/kernels.hpp"

namespace movingbox {

namespace {

void require_fixed(const WaveField& phi, const char* who) {
    if (phi.frame != Frame::FixedBox)
        throw ValidationError(std::string(who) + ": expected a fixed-frame field");
}

}

double energy(const WaveField& phi, double l, const PhysicalConstants& consts) {
    require_fixed(phi, "energy");
    const HermitianBanded h = assemble_kinetic(phi.grid, l, consts);
    std::vector<cplx> hphi(phi.amps.size());
    kernels::hb_matvec(h, phi.amps, hphi);
    return phi.spacing() * kernels::dot(phi.amps, hphi).real();
}

double potential_energy(const WaveField& phi, const Kinematics& kin, double t,
                        const PotentialSpec& pot) {
    require_fixed(phi, "potential_energy");
    double acc = 0.0;
    for (std::size_t j = 0; j < phi.amps.size(); ++j)
        acc += std::norm(phi.amps[j]) * pot.value(kin.l * phi.grid.node(j) + kin.d, t);
    return phi.spacing() * acc;
}

cplx boundary_derivative(const WaveField& phi, Side side) {
    const std::size_t n = phi.amps.size();
    const double h = phi.spacing();
    if (side == Side::Left) return (4.0 * phi.amps[0] - phi.amps[1]) / (2.0 * h);
    return (phi.amps[n - 2] - 4.0 * phi.amps[n - 1]) / (2.0 * h);
}

double energy_rate_fixed_frame(const WaveField& phi, const WallSchedule& schedule, double t,
                               const PhysicalConstants& consts) {
    require_fixed(phi, "energy_rate_fixed_frame");
    const Kinematics kin = schedule.evaluate(t);
    const double dl = std::norm(boundary_derivative(phi, Side::Left));
    const double dr = std::norm(boundary_derivative(phi, Side::Right));
    const double pref = consts.hbar * consts.hbar / (2.0 * consts.mass * kin.l * kin.l * kin.l);
    return -pref * ((0.5 * kin.ldot + kin.ddot) * dr - (-0.5 * kin.ldot + kin.ddot) * dl);
}

double energy_rate_moving_frame(const BoundaryDerivs& derivs, const WallSchedule& schedule,
                                double t, const PhysicalConstants& consts) {
    const WallState w = schedule.wall_positions(t);
    const double pref = consts.hbar * consts.hbar / (2.0 * consts.mass);
    return -pref * (w.bdot * std::norm(derivs.dpsi_b) - w.adot * std::norm(derivs.dpsi_a));
}

double energy_rate_potential_term(const WaveField& phi, const WallSchedule& schedule, double t,
                                  const PotentialSpec& pot) {
    require_fixed(phi, "energy_rate_potential_term");
    if (pot.is_static) return 0.0;
    const Kinematics kin = schedule.evaluate(t);
    double acc = 0.0;
    for (std::size_t j = 0; j < phi.amps.size(); ++j)
        acc += std::norm(phi.amps[j]) * pot.dvdt(kin.l * phi.grid.node(j) + kin.d, t);
    return phi.spacing() * acc;
}

double energy_rate_with_potential(const WaveField& phi, const WallSchedule& schedule, double t,
                                  const PotentialSpec& pot, const PhysicalConstants& consts) {
    return energy_rate_fixed_frame(phi, schedule, t, consts) +
           energy_rate_potential_term(phi, schedule, t, pot);
}

DiagnosticsRecord make_record(const WaveField& phi, const WallSchedule& schedule, double t,
                              const PotentialSpec* potential, const PhysicalConstants& consts) {
    const Kinematics kin = schedule.evaluate(t);
    DiagnosticsRecord rec;
    rec.t = t;
    rec.norm = phi.norm();
    rec.energy = energy(phi, kin.l, consts);
    rec.energy_total =
        rec.energy + (potential ? potential_energy(phi, kin, t, *potential) : 0.0);
    rec.rate_boundary = energy_rate_fixed_frame(phi, schedule, t, consts);
    rec.rate_potential =
        potential ? energy_rate_potential_term(phi, schedule, t, *potential) : 0.0;
    rec.dphi_left = boundary_derivative(phi, Side::Left);
    rec.dphi_right = boundary_derivative(phi, Side::Right);
    return rec;
}

void finalize_fd_rates(std::vector<DiagnosticsRecord>& records) {
    for (std::size_t k = 0; k + 1 < records.size(); ++k) {
        if (k == 0) continue;
        const double dt = records[k + 1].t - records[k - 1].t;
        if (dt <= 0.0) continue;
        records[k].rate_fd = (records[k + 1].energy_total - records[k - 1].energy_total) / dt;
    }
}

}
