#include "movingbox/wavefield.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "movingbox/errors.hpp"
#include "movingbox/kernels.hpp"

namespace movingbox {

double WaveField::norm() const {
    return std::sqrt(spacing() * kernels::norm2sq(amps));
}

void WaveField::normalize() {
    const double n = norm();
    if (n <= 0.0) throw ValidationError("normalize: field has zero norm");
    const double inv = 1.0 / n;
    for (cplx& a : amps) a *= inv;
}

cplx inner(const WaveField& a, const WaveField& b) {
    if (!(a.grid == b.grid))
        throw GridMismatch("inner: grids differ (" + std::to_string(a.grid.n_cells()) + " vs " +
                           std::to_string(b.grid.n_cells()) + " cells)");
    if (a.frame != b.frame) throw ValidationError("inner: fields live in different frames");
    if (a.frame == Frame::MovingWall) {
        const double tol = 1e-9 * (std::abs(a.box_l) + 1.0);
        if (std::abs(a.box_l - b.box_l) > tol || std::abs(a.box_d - b.box_d) > tol)
            throw ValidationError("inner: moving-wall fields cover different intervals");
    }
    return a.spacing() * kernels::dot(a.amps, b.amps);
}

WaveField eigenmode(const FixedGrid& grid, int n) {
    const int n_max = static_cast<int>(grid.n_interior());
    if (n < 1 || n > n_max)
        throw BadMode("eigenmode: n must be in [1, " + std::to_string(n_max) + "], got " +
                      std::to_string(n));
    WaveField phi(grid, Frame::FixedBox);
    const double dxi = grid.spacing();
    for (std::size_t j = 0; j < phi.amps.size(); ++j)
        phi.amps[j] = std::sin(static_cast<double>(n) * std::numbers::pi *
                               static_cast<double>(j + 1) * dxi);
    phi.normalize();
    return phi;
}

}
