#include "movingbox/operators.hpp"

#include <string>

#include "movingbox/errors.hpp"

namespace movingbox {

namespace {

void check_width(double l, double l_min) {
    if (!(l >= l_min))
        throw WallCollision("operator assembly: l = " + std::to_string(l) +
                            " below l_min = " + std::to_string(l_min));
}

}

HermitianBanded assemble_kinetic(const FixedGrid& grid, double l, const PhysicalConstants& consts,
                                 double l_min) {
    check_width(l, l_min);
    const std::size_t n = grid.n_interior();
    const double dxi = grid.spacing();
    const double c = consts.hbar * consts.hbar / (2.0 * consts.mass * l * l * dxi * dxi);
    HermitianBanded h(n);
    for (std::size_t i = 0; i < n; ++i) h.diag()[i] = 2.0 * c;
    for (std::size_t i = 0; i + 1 < n; ++i) h.up1()[i] = -c;
    return h;
}

HermitianBanded assemble_momentum(const FixedGrid& grid, const PhysicalConstants& consts) {
    const std::size_t n = grid.n_interior();
    const cplx coeff{0.0, -consts.hbar / (2.0 * grid.spacing())};  // -i hbar / (2 dxi)
    HermitianBanded p(n);
    for (std::size_t i = 0; i + 1 < n; ++i) p.up1()[i] = coeff;
    return p;
}

HermitianBanded assemble_virial(const FixedGrid& grid, const PhysicalConstants& consts) {
    const std::size_t n = grid.n_interior();
    const cplx coeff{0.0, -consts.hbar / (2.0 * grid.spacing())};
    HermitianBanded v(n);
    // (X p + p X)/2 with X diagonal: entry [i, i+1] averages the two nodes.
    for (std::size_t i = 0; i + 1 < n; ++i)
        v.up1()[i] = 0.5 * (grid.node(i) + grid.node(i + 1)) * coeff;
    return v;
}

HermitianBanded assemble_generator(const FixedGrid& grid, const Kinematics& kin,
                                   const PhysicalConstants& consts, double l_min) {
    check_width(kin.l, l_min);
    HermitianBanded k = assemble_virial(grid, consts);
    k.scale(-kin.ldot / kin.l);
    k.add_scaled(-kin.ddot / kin.l, assemble_momentum(grid, consts));
    return k;
}

HermitianBanded assemble_full(const FixedGrid& grid, const WallSchedule& schedule, double t,
                              const PotentialSpec* potential, const PhysicalConstants& consts) {
    const Kinematics kin = schedule.evaluate(t);
    HermitianBanded h = assemble_kinetic(grid, kin.l, consts, schedule.l_min());
    h.add_scaled(1.0, assemble_generator(grid, kin, consts, schedule.l_min()));
    if (potential) {
        for (std::size_t i = 0; i < h.dim(); ++i)
            h.diag()[i] += potential->value(kin.l * grid.node(i) + kin.d, t);
    }
    return h;
}

}
