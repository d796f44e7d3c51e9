#pragma once

#include <vector>

#include "movingbox/grid.hpp"

namespace movingbox {

/// FixedBox: the reference interval [-1/2, 1/2].
/// MovingWall: the physical interval [d - l/2, d + l/2].
enum class Frame { FixedBox, MovingWall };

/// Complex amplitudes on the interior nodes of a box, in either frame.
/// MovingWall fields sample the images of the fixed-grid nodes, so the
/// spacing is l * grid.spacing() and the walls again carry implicit zeros.
struct WaveField {
    WaveField(FixedGrid grid_, Frame frame_, double time_ = 0.0, double l = 1.0, double d = 0.0)
        : grid(grid_), frame(frame_), time(time_), box_l(l), box_d(d),
          amps(grid_.n_interior(), cplx{0.0, 0.0}) {}

    FixedGrid grid;
    Frame frame;
    double time;
    double box_l;  // interval width  (1 in FixedBox frame)
    double box_d;  // interval center (0 in FixedBox frame)
    std::vector<cplx> amps;

    double spacing() const {
        return frame == Frame::FixedBox ? grid.spacing() : box_l * grid.spacing();
    }

    /// Physical coordinate of interior node j.
    double node(std::size_t j) const {
        return frame == Frame::FixedBox ? grid.node(j) : box_l * grid.node(j) + box_d;
    }

    /// Trapezoidal L2 norm (wall zeros make it a plain scaled sum).
    double norm() const;
    void normalize();
};

/// Trapezoidal inner product <a|b>. Fields must live on the same grid, in
/// the same frame, and (for MovingWall) on the same interval.
cplx inner(const WaveField& a, const WaveField& b);

/// Normalized box eigenmode sqrt(2) sin(n pi (xi + 1/2)) on the fixed grid.
/// These are exact eigenvectors of the discrete Dirichlet Laplacian.
WaveField eigenmode(const FixedGrid& grid, int n);

}
