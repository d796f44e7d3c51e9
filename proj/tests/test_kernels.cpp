// The OpenMP kernels must agree with the serial reference to roundoff, and
// below the parallel grain they must agree bitwise (the omp variants fall
// back to serial loops there, so small runs are thread-count independent).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "movingbox/banded.hpp"
#include "movingbox/kernels.hpp"

using namespace movingbox;

namespace {

std::vector<cplx> random_vector(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& c : v) c = cplx{u(rng), u(rng)};
    return v;
}

HermitianBanded random_banded(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    HermitianBanded a(n);
    for (auto& d : a.diag()) d = u(rng);
    for (auto& c : a.up1()) c = cplx{u(rng), u(rng)};
    for (auto& c : a.up2()) c = cplx{u(rng), u(rng)};
    return a;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("serial and omp kernels agree above the grain") {
    const std::size_t n = 3 * kernels::kParallelGrain;
    const HermitianBanded a = random_banded(n, 7);
    const auto x = random_vector(n, 8);
    const auto w = random_vector(n, 9);

    std::vector<cplx> ys(n), yp(n);
    kernels::serial::hb_matvec(a, x, ys);
    kernels::omp::hb_matvec(a, x, yp);
    CHECK(max_abs_diff(ys, yp) < 1e-13);

    const cplx c{0.0, 3e-4};
    kernels::serial::cayley_rhs(a, c, x, ys);
    kernels::omp::cayley_rhs(a, c, x, yp);
    CHECK(max_abs_diff(ys, yp) < 1e-13);

    const cplx ds = kernels::serial::dot(x, w);
    const cplx dp = kernels::omp::dot(x, w);
    CHECK(std::abs(ds - dp) < 1e-12 * std::abs(ds));

    CHECK(kernels::serial::norm2sq(x) ==
          doctest::Approx(kernels::omp::norm2sq(x)).epsilon(1e-13));

    std::vector<cplx> hs(x), hp(x);
    kernels::serial::hadamard(w, hs);
    kernels::omp::hadamard(w, hp);
    CHECK(max_abs_diff(hs, hp) == 0.0);

    std::vector<double> mask(n, 0.5);
    hs = x;
    hp = x;
    kernels::serial::hadamard_real(mask, hs);
    kernels::omp::hadamard_real(mask, hp);
    CHECK(max_abs_diff(hs, hp) == 0.0);
}

TEST_CASE("below the grain the omp variants match bitwise") {
    const std::size_t n = 100;  // << kParallelGrain
    const HermitianBanded a = random_banded(n, 21);
    const auto x = random_vector(n, 22);
    const auto w = random_vector(n, 23);

    std::vector<cplx> ys(n), yp(n);
    kernels::serial::hb_matvec(a, x, ys);
    kernels::omp::hb_matvec(a, x, yp);
    CHECK(max_abs_diff(ys, yp) == 0.0);

    CHECK(kernels::serial::dot(x, w) == kernels::omp::dot(x, w));
    CHECK(kernels::serial::norm2sq(x) == kernels::omp::norm2sq(x));
}

TEST_CASE("dispatchers honor the process-wide policy") {
    const std::size_t n = 2 * kernels::kParallelGrain;
    const HermitianBanded a = random_banded(n, 31);
    const auto x = random_vector(n, 32);

    std::vector<cplx> reference(n), dispatched(n);
    kernels::serial::hb_matvec(a, x, reference);

    const kernels::Exec old = kernels::execution_policy();
    kernels::execution_policy() = kernels::Exec::Serial;
    kernels::hb_matvec(a, x, dispatched);
    kernels::execution_policy() = old;

    CHECK(max_abs_diff(reference, dispatched) == 0.0);
}

TEST_CASE("quadratic form of a Hermitian matrix is real") {
    const std::size_t n = 5000;
    const HermitianBanded a = random_banded(n, 41);
    const auto x = random_vector(n, 42);
    std::vector<cplx> y(n);
    kernels::hb_matvec(a, x, y);
    const cplx q = kernels::dot(x, y);
    CHECK(std::abs(q.imag()) < 1e-12 * std::abs(q.real()));
}

// Dense complex Gaussian elimination with partial pivoting, as an
// independent oracle for the banded no-pivot LU.
namespace {

std::vector<cplx> dense_solve(std::vector<std::vector<cplx>> a, std::vector<cplx> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<cplx> x(n);
    for (std::size_t i = n; i-- > 0;) {
        cplx s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

std::vector<std::vector<cplx>> dense_cayley(const HermitianBanded& h, cplx c) {
    const std::size_t n = h.dim();
    std::vector<std::vector<cplx>> a(n, std::vector<cplx>(n, cplx{0.0, 0.0}));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 1.0 + c * h.diag()[i];
        if (i + 1 < n) {
            a[i][i + 1] = c * h.up1()[i];
            a[i + 1][i] = c * std::conj(h.up1()[i]);
        }
        if (i + 2 < n) {
            a[i][i + 2] = c * h.up2()[i];
            a[i + 2][i] = c * std::conj(h.up2()[i]);
        }
    }
    return a;
}

}  // namespace

TEST_CASE("banded Cayley solve matches dense elimination") {
    const std::size_t n = 40;
    const HermitianBanded h = random_banded(n, 51);
    const cplx c{0.0, 0.37};
    const auto b = random_vector(n, 52);

    BandedSystem sys = BandedSystem::cayley_lhs(h, c);
    sys.factorize();
    std::vector<cplx> x = b;
    sys.solve(x);

    const auto x_ref = dense_solve(dense_cayley(h, c), b);
    CHECK(max_abs_diff(x, x_ref) < 1e-12);

    // Residual against a direct pentadiagonal multiply of I + cH.
    const auto a = dense_cayley(h, c);
    double resid = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx s{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
        resid = std::max(resid, std::abs(s - b[i]));
        scale = std::max(scale, std::abs(b[i]));
    }
    CHECK(resid < 1e-13 * scale * 10.0);
}
