// Operator assembly against closed-form matrix entries, exact discrete
// eigenpairs of the Dirichlet Laplacian, continuum matrix elements, and the
// algebraic structure of the wall-motion generator.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "movingbox/errors.hpp"
#include "movingbox/kernels.hpp"
#include "movingbox/observables.hpp"
#include "movingbox/operators.hpp"
#include "movingbox/wavefield.hpp"

using namespace movingbox;
using std::numbers::pi;

namespace {

// <a| M |b> under the trapezoidal weight.
cplx matrix_element(const HermitianBanded& m, const WaveField& a, const WaveField& b) {
    std::vector<cplx> y(b.amps.size());
    kernels::hb_matvec(m, b.amps, y);
    return kernels::dot(a.amps, y) * a.spacing();
}

double band_max_diff(const HermitianBanded& a, const HermitianBanded& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a.diag()[i] - b.diag()[i]));
    for (std::size_t i = 0; i + 1 < a.dim(); ++i)
        m = std::max(m, std::abs(a.up1()[i] - b.up1()[i]));
    for (std::size_t i = 0; i + 2 < a.dim(); ++i)
        m = std::max(m, std::abs(a.up2()[i] - b.up2()[i]));
    return m;
}

}  // namespace

TEST_CASE("kinetic matrix entries at N = 8: diag 64, off-diagonal -32") {
    // spacing 1/8, prefactor hbar^2/(2 m l^2 dxi^2) = 32 for unit constants.
    const HermitianBanded h = assemble_kinetic(FixedGrid(8), 1.0);
    REQUIRE(h.dim() == 7);
    for (double d : h.diag()) CHECK(d == doctest::Approx(64.0));
    for (const cplx& c : h.up1()) {
        CHECK(c.real() == doctest::Approx(-32.0));
        CHECK(c.imag() == 0.0);
    }
    for (const cplx& c : h.up2()) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("eigenmodes are exact eigenvectors with the discrete eigenvalue") {
    // The three-point Laplacian with Dirichlet ends has eigenvalues
    // (2/dxi^2) sin^2(n pi dxi / 2) exactly; the quadratic form on the exact
    // eigenvector reproduces them to roundoff.
    const std::size_t n_cells = 512;
    const FixedGrid grid(n_cells);
    const double dxi = grid.spacing();
    for (int n : {1, 2, 3, 7}) {
        const WaveField mode = eigenmode(grid, n);
        const double lambda =
            2.0 * std::pow(std::sin(n * pi * dxi / 2.0) / dxi, 2);  // hbar = m = 1
        CHECK(energy(mode, 1.0) == doctest::Approx(lambda).epsilon(1e-12));
        // Continuum limit pi^2 n^2 / 2 to second order in the spacing.
        const double continuum = pi * pi * n * n / 2.0;
        CHECK(std::abs(energy(mode, 1.0) - continuum) / continuum <
              1.2 * std::pow(n * pi * dxi, 2) / 12.0);
    }
}

TEST_CASE("kinetic entries scale exactly as 1 / l^2") {
    const FixedGrid grid(64);
    const HermitianBanded h1 = assemble_kinetic(grid, 1.0);
    const HermitianBanded h2 = assemble_kinetic(grid, 2.0);
    for (std::size_t i = 0; i < h1.dim(); ++i) CHECK(h2.diag()[i] == h1.diag()[i] / 4.0);
    for (std::size_t i = 0; i + 1 < h1.dim(); ++i) CHECK(h2.up1()[i] == h1.up1()[i] / 4.0);

    const WaveField mode = eigenmode(grid, 1);
    CHECK(energy(mode, 2.0) == doctest::Approx(energy(mode, 1.0) / 4.0).epsilon(1e-15));
    CHECK_THROWS_AS(assemble_kinetic(grid, 1e-9), WallCollision);
}

TEST_CASE("momentum is Hermitian and parity kills diagonal elements") {
    const FixedGrid grid(256);
    const HermitianBanded p = assemble_momentum(grid);
    const WaveField m1 = eigenmode(grid, 1);
    const WaveField m2 = eigenmode(grid, 2);

    const cplx ab = matrix_element(p, m1, m2);
    const cplx ba = matrix_element(p, m2, m1);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-14);

    // Real wavefunction: -i d/dxi maps it to a purely imaginary vector, so
    // the expectation's real part vanishes identically.
    CHECK(matrix_element(p, m1, m1).real() == 0.0);

    // Continuum <1|p|2> = (8/3) i hbar for unit-width box modes; the central
    // difference is second-order accurate in the spacing.
    CHECK(std::abs(ab - cplx{0.0, 8.0 / 3.0}) < 1e-3);
}

TEST_CASE("virial operator is Hermitian with the continuum <1|D|3> element") {
    const FixedGrid grid(256);
    const HermitianBanded d = assemble_virial(grid);
    const WaveField m1 = eigenmode(grid, 1);
    const WaveField m3 = eigenmode(grid, 3);

    const cplx e13 = matrix_element(d, m1, m3);
    const cplx e31 = matrix_element(d, m3, m1);
    CHECK(std::abs(e13 - std::conj(e31)) < 1e-14);

    // (x p + p x)/2 between modes 1 and 3 of the unit box: -3i/4 (hbar = 1);
    // integration by parts of  int sin(pi u) (u - 1/2) d/du sin(3 pi u).
    CHECK(std::abs(e13 - cplx{0.0, -0.75}) < 1e-3);

    // Parity: the diagonal expectation vanishes on every mode.
    for (int n : {1, 2, 5}) {
        const WaveField m = eigenmode(grid, n);
        CHECK(std::abs(matrix_element(d, m, m)) < 1e-13);
    }
}

TEST_CASE("generator is linear in the wall velocities") {
    const FixedGrid grid(128);
    Kinematics k1{1.3, 0.2, 0.4, -0.1};
    Kinematics k2{1.3, 0.2, -0.15, 0.35};
    Kinematics sum = k1;
    sum.ldot += k2.ldot;
    sum.ddot += k2.ddot;

    HermitianBanded g = assemble_generator(grid, k1);
    g.add_scaled(1.0, assemble_generator(grid, k2));
    const HermitianBanded g_sum = assemble_generator(grid, sum);
    CHECK(band_max_diff(g, g_sum) < 1e-14 * g_sum.max_abs());
}

TEST_CASE("translation at constant velocity assembles H - v p") {
    const FixedGrid grid(512);
    const double v = 0.5;
    const WallSchedule s = WallSchedule::linear_translation(1.0, 0.0, v);
    const HermitianBanded full = assemble_full(grid, s, 0.7);

    HermitianBanded manual = assemble_kinetic(grid, 1.0);
    manual.add_scaled(-v, assemble_momentum(grid));
    CHECK(band_max_diff(full, manual) <= 1e-14 * manual.max_abs());
}

TEST_CASE("potential lands on the diagonal at the mapped nodes") {
    const FixedGrid grid(64);
    const WallSchedule s = WallSchedule::static_box(1.3, 0.2);
    const PotentialSpec pot = harmonic_potential(2.0);  // V(x) = x^2
    const HermitianBanded with = assemble_full(grid, s, 0.0, &pot);
    const HermitianBanded without = assemble_full(grid, s, 0.0);
    // Recovering V by subtraction cancels against the ~1/dxi^2 kinetic
    // diagonal, so the tolerance is absolute in that scale.
    for (std::size_t i = 0; i < grid.n_interior(); ++i) {
        const double x = 1.3 * grid.node(i) + 0.2;
        CHECK(std::abs(with.diag()[i] - without.diag()[i] - x * x) <
              1e-12 * without.max_abs());
    }
    for (std::size_t i = 0; i + 1 < grid.n_interior(); ++i)
        CHECK(with.up1()[i] == without.up1()[i]);
}

TEST_CASE("full operator for an expanding box is Hermitian") {
    const FixedGrid grid(128);
    const WallSchedule s = WallSchedule::linear_expansion(1.0, 0.3, 0.0);
    const HermitianBanded h = assemble_full(grid, s, 0.9);
    const WaveField m2 = eigenmode(grid, 2);
    const WaveField m5 = eigenmode(grid, 5);
    const cplx ab = matrix_element(h, m2, m5);
    const cplx ba = matrix_element(h, m5, m2);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
    CHECK(std::abs(matrix_element(h, m2, m2).imag()) < 1e-12);
}
