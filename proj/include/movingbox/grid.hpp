#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "movingbox/errors.hpp"

namespace movingbox {

using cplx = std::complex<double>;

/// hbar and particle mass, configurable; natural units by default.
struct PhysicalConstants {
    double hbar = 1.0;
    double mass = 1.0;
};

/// Uniform grid on the reference interval [-1/2, 1/2] with N cells.
/// Wavefunctions live on the N-1 interior nodes; the walls carry
/// implicit zeros (Dirichlet).
class FixedGrid {
public:
    explicit FixedGrid(std::size_t n_cells) : n_(n_cells) {
        if (n_cells < 8)
            throw ValidationError("grid: n must be at least 8, got " + std::to_string(n_cells));
    }

    std::size_t n_cells() const { return n_; }
    std::size_t n_interior() const { return n_ - 1; }
    double spacing() const { return 1.0 / static_cast<double>(n_); }

    /// Interior node j = 0 .. n_interior()-1 sits at xi = -1/2 + (j+1)*spacing.
    double node(std::size_t j) const { return -0.5 + static_cast<double>(j + 1) * spacing(); }

    std::vector<double> nodes() const {
        std::vector<double> xs(n_interior());
        for (std::size_t j = 0; j < xs.size(); ++j) xs[j] = node(j);
        return xs;
    }

    bool operator==(const FixedGrid& other) const { return n_ == other.n_; }

private:
    std::size_t n_;
};

}
