#pragma once

#include <cstddef>
#include <span>

#include "movingbox/banded.hpp"
#include "movingbox/grid.hpp"

// Grid-level inner loops, implemented twice: a plain serial reference and an
// OpenMP variant. The free functions at namespace scope dispatch on the
// process-wide execution policy; tests pin both variants against each other
// and tools/bench_kernels times them side by side.
namespace movingbox::kernels {

enum class Exec { Serial, Parallel };

/// Process-wide execution policy. Defaults to Parallel.
Exec& execution_policy();

/// Loops shorter than this run serially even under the Parallel policy:
/// fork/join overhead dwarfs the work on desk-size grids, and keeping the
/// reductions single-threaded there makes small runs independent of the
/// thread count.
inline constexpr std::size_t kParallelGrain = 4096;

namespace serial {
void hb_matvec(const HermitianBanded& a, std::span<const cplx> x, std::span<cplx> y);
/// y = x - c * (A x), the explicit half of a Cayley step.
void cayley_rhs(const HermitianBanded& a, cplx c, std::span<const cplx> x, std::span<cplx> y);
/// sum conj(a_i) * b_i
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
/// sum |a_i|^2
double norm2sq(std::span<const cplx> a);
/// x_i *= f_i
void hadamard(std::span<const cplx> f, std::span<cplx> x);
void hadamard_real(std::span<const double> f, std::span<cplx> x);
}

namespace omp {
void hb_matvec(const HermitianBanded& a, std::span<const cplx> x, std::span<cplx> y);
void cayley_rhs(const HermitianBanded& a, cplx c, std::span<const cplx> x, std::span<cplx> y);
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
double norm2sq(std::span<const cplx> a);
void hadamard(std::span<const cplx> f, std::span<cplx> x);
void hadamard_real(std::span<const double> f, std::span<cplx> x);
}

void hb_matvec(const HermitianBanded& a, std::span<const cplx> x, std::span<cplx> y);
void cayley_rhs(const HermitianBanded& a, cplx c, std::span<const cplx> x, std::span<cplx> y);
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
double norm2sq(std::span<const cplx> a);
void hadamard(std::span<const cplx> f, std::span<cplx> x);
void hadamard_real(std::span<const double> f, std::span<cplx> x);

}
