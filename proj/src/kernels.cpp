#include "movingbox/kernels.hpp"

#include <cassert>

namespace movingbox::kernels {

Exec& execution_policy() {
    static Exec policy = Exec::Parallel;
    return policy;
}

namespace serial {

void hb_matvec(const HermitianBanded& a, std::span<const cplx> x, std::span<cplx> y) {
    const std::size_t n = a.dim();
    assert(x.size() == n && y.size() == n);
    const auto& d = a.diag();
    const auto& u1 = a.up1();
    const auto& u2 = a.up2();
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc = d[i] * x[i];
        if (i + 1 < n) acc += u1[i] * x[i + 1];
        if (i >= 1) acc += std::conj(u1[i - 1]) * x[i - 1];
        if (i + 2 < n) acc += u2[i] * x[i + 2];
        if (i >= 2) acc += std::conj(u2[i - 2]) * x[i - 2];
        y[i] = acc;
    }
}

void cayley_rhs(const HermitianBanded& a, cplx c, std::span<const cplx> x, std::span<cplx> y) {
    const std::size_t n = a.dim();
    assert(x.size() == n && y.size() == n);
    const auto& d = a.diag();
    const auto& u1 = a.up1();
    const auto& u2 = a.up2();
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc = d[i] * x[i];
        if (i + 1 < n) acc += u1[i] * x[i + 1];
        if (i >= 1) acc += std::conj(u1[i - 1]) * x[i - 1];
        if (i + 2 < n) acc += u2[i] * x[i + 2];
        if (i >= 2) acc += std::conj(u2[i - 2]) * x[i - 2];
        y[i] = x[i] - c * acc;
    }
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    assert(a.size() == b.size());
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const cplx t = std::conj(a[i]) * b[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

double norm2sq(std::span<const cplx> a) {
    double s = 0.0;
    for (const cplx& v : a) s += v.real() * v.real() + v.imag() * v.imag();
    return s;
}

void hadamard(std::span<const cplx> f, std::span<cplx> x) {
    assert(f.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= f[i];
}

void hadamard_real(std::span<const double> f, std::span<cplx> x) {
    assert(f.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= f[i];
}

}

namespace omp {

void hb_matvec(const HermitianBanded& a, std::span<const cplx> x, std::span<cplx> y) {
    const std::size_t n = a.dim();
    assert(x.size() == n && y.size() == n);
    const auto& d = a.diag();
    const auto& u1 = a.up1();
    const auto& u2 = a.up2();
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc = d[i] * x[i];
        if (i + 1 < n) acc += u1[i] * x[i + 1];
        if (i >= 1) acc += std::conj(u1[i - 1]) * x[i - 1];
        if (i + 2 < n) acc += u2[i] * x[i + 2];
        if (i >= 2) acc += std::conj(u2[i - 2]) * x[i - 2];
        y[i] = acc;
    }
}

void cayley_rhs(const HermitianBanded& a, cplx c, std::span<const cplx> x, std::span<cplx> y) {
    const std::size_t n = a.dim();
    assert(x.size() == n && y.size() == n);
    const auto& d = a.diag();
    const auto& u1 = a.up1();
    const auto& u2 = a.up2();
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc = d[i] * x[i];
        if (i + 1 < n) acc += u1[i] * x[i + 1];
        if (i >= 1) acc += std::conj(u1[i - 1]) * x[i - 1];
        if (i + 2 < n) acc += u2[i] * x[i + 2];
        if (i >= 2) acc += std::conj(u2[i - 2]) * x[i - 2];
        y[i] = x[i] - c * acc;
    }
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    assert(a.size() == b.size());
    const std::size_t n = a.size();
    double re = 0.0, im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im) if (n >= kParallelGrain)
    for (std::size_t i = 0; i < n; ++i) {
        const cplx t = std::conj(a[i]) * b[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

double norm2sq(std::span<const cplx> a) {
    const std::size_t n = a.size();
    double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s) if (n >= kParallelGrain)
    for (std::size_t i = 0; i < n; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

void hadamard(std::span<const cplx> f, std::span<cplx> x) {
    assert(f.size() == x.size());
    const std::size_t n = x.size();
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
    for (std::size_t i = 0; i < n; ++i) x[i] *= f[i];
}

void hadamard_real(std::span<const double> f, std::span<cplx> x) {
    assert(f.size() == x.size());
    const std::size_t n = x.size();
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
    for (std::size_t i = 0; i < n; ++i) x[i] *= f[i];
}

}

void hb_matvec(const HermitianBanded& a, std::span<const cplx> x, std::span<cplx> y) {
    execution_policy() == Exec::Parallel ? omp::hb_matvec(a, x, y) : serial::hb_matvec(a, x, y);
}

void cayley_rhs(const HermitianBanded& a, cplx c, std::span<const cplx> x, std::span<cplx> y) {
    execution_policy() == Exec::Parallel ? omp::cayley_rhs(a, c, x, y)
                                         : serial::cayley_rhs(a, c, x, y);
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    return execution_policy() == Exec::Parallel ? omp::dot(a, b) : serial::dot(a, b);
}

double norm2sq(std::span<const cplx> a) {
    return execution_policy() == Exec::Parallel ? omp::norm2sq(a) : serial::norm2sq(a);
}

void hadamard(std::span<const cplx> f, std::span<cplx> x) {
    execution_policy() == Exec::Parallel ? omp::hadamard(f, x) : serial::hadamard(f, x);
}

void hadamard_real(std::span<const double> f, std::span<cplx> x) {
    execution_policy() == Exec::Parallel ? omp::hadamard_real(f, x)
                                         : serial::hadamard_real(f, x);
}

}
