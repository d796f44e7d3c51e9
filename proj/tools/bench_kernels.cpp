// Times the serial reference kernels against the OpenMP variants, then a
// full Crank-Nicolson step under both policies. Speedups near 1 are the
// honest result on one core or below the parallel grain size.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include "movingbox/kernels.hpp"
#include "movingbox/operators.hpp"
#include "movingbox/propagator.hpp"
#include "movingbox/schedule.hpp"
#include "movingbox/wavefield.hpp"

using namespace movingbox;

namespace {

double g_sink = 0.0;

template <class F>
double time_us(int reps, F&& body) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int repeat = 0; repeat < 3; ++repeat) {
        const auto t0 = clock::now();
        for (int i = 0; i < reps; ++i) body();
        const double us =
            std::chrono::duration<double, std::micro>(clock::now() - t0).count() / reps;
        if (us < best) best = us;
    }
    return best;
}

std::vector<cplx> random_vector(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& c : v) c = cplx{u(rng), u(rng)};
    return v;
}

void bench_vector_kernels(std::size_t n, int reps) {
    const HermitianBanded a = assemble_kinetic(FixedGrid(n + 1), 1.0);
    const auto x = random_vector(n, 42);
    std::vector<cplx> y(n), scratch(x);
    std::vector<double> mask(n, 0.5);
    const cplx c{0.0, 5e-5};

    struct Row {
        const char* name;
        double serial_us;
        double parallel_us;
    };
    Row rows[] = {
        {"hb_matvec",
         time_us(reps, [&] { kernels::serial::hb_matvec(a, x, y); }),
         time_us(reps, [&] { kernels::omp::hb_matvec(a, x, y); })},
        {"cayley_rhs",
         time_us(reps, [&] { kernels::serial::cayley_rhs(a, c, x, y); }),
         time_us(reps, [&] { kernels::omp::cayley_rhs(a, c, x, y); })},
        {"dot",
         time_us(reps, [&] { g_sink += kernels::serial::dot(x, y).real(); }),
         time_us(reps, [&] { g_sink += kernels::omp::dot(x, y).real(); })},
        {"norm2sq",
         time_us(reps, [&] { g_sink += kernels::serial::norm2sq(x); }),
         time_us(reps, [&] { g_sink += kernels::omp::norm2sq(x); })},
        {"hadamard_real",
         time_us(reps, [&] { kernels::serial::hadamard_real(mask, scratch); }),
         time_us(reps, [&] { kernels::omp::hadamard_real(mask, scratch); })},
    };
    for (const Row& r : rows)
        std::printf("%-14s %9zu %12.2f %12.2f %9.2fx\n", r.name, n, r.serial_us, r.parallel_us,
                    r.serial_us / r.parallel_us);
    g_sink += y[0].real() + scratch[0].imag();
}

void bench_cn_step(std::size_t n_cells, int reps) {
    const FixedGrid grid(n_cells);
    WaveField phi = eigenmode(grid, 1);
    const WallSchedule schedule = WallSchedule::linear_expansion(1.0, 0.05);

    auto run_policy = [&](kernels::Exec policy) {
        kernels::execution_policy() = policy;
        WaveField state = phi;
        return time_us(reps, [&] { state = step(state, schedule, 1e-4); });
    };
    const double serial_us = run_policy(kernels::Exec::Serial);
    const double parallel_us = run_policy(kernels::Exec::Parallel);
    kernels::execution_policy() = kernels::Exec::Parallel;
    std::printf("%-14s %9zu %12.2f %12.2f %9.2fx\n", "cn_step", n_cells - 1, serial_us,
                parallel_us, serial_us / parallel_us);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    std::printf("threads available: %d (parallel grain: %zu elements)\n", omp_get_max_threads(),
                kernels::kParallelGrain);
    std::printf("%-14s %9s %12s %12s %9s\n", "kernel", "n", "serial(us)", "omp(us)", "speedup");

    const std::size_t sizes[] = {1024, 4096, 16384, 65536, 262144};
    for (std::size_t n : sizes) {
        const double budget = quick ? 4e6 : 4e7;  // element visits per measurement
        const int reps = static_cast<int>(std::max(1.0, budget / static_cast<double>(n)));
        bench_vector_kernels(n, reps);
    }
    bench_cn_step(4096, quick ? 50 : 400);
    bench_cn_step(65536, quick ? 5 : 40);

    std::printf("(checksum %.3g)\n", g_sink);
    return 0;
}
