#include "movingbox/interp.hpp"

#include <cmath>
#include <string>

#include "movingbox/errors.hpp"

namespace movingbox {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw ValidationError("spline: need at least two samples and matching column lengths");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i] < x_[i + 1]))
            throw ValidationError("spline: sample abscissae must be strictly increasing (row " +
                                  std::to_string(i + 1) + ")");

    // Second derivatives from the natural-spline tridiagonal system.
    m_.assign(n, 0.0);
    if (n > 2) {
        std::vector<double> diag(n - 2), rhs(n - 2), upper(n - 2);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h0 = x_[i] - x_[i - 1];
            const double h1 = x_[i + 1] - x_[i];
            diag[i - 1] = 2.0 * (h0 + h1);
            upper[i - 1] = h1;
            rhs[i - 1] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
        }
        for (std::size_t i = 1; i < diag.size(); ++i) {
            const double w = (x_[i + 1] - x_[i]) / diag[i - 1];  // lower coupling h_i
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for (std::size_t ii = diag.size(); ii-- > 0;) {
            double v = rhs[ii];
            if (ii + 1 < diag.size()) v -= upper[ii] * m_[ii + 2];
            m_[ii + 1] = v / diag[ii];
        }
    }
}

std::size_t CubicSpline::segment(double x) const {
    // Rightmost knot at or left of x; clamped to a valid segment index.
    std::size_t lo = 0, hi = x_.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        (x_[mid] <= x ? lo : hi) = mid;
    }
    return lo;
}

double CubicSpline::value(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double t = x - x_[i];
    const double b = (y_[i + 1] - y_[i]) / h - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
    return y_[i] + t * (b + t * (m_[i] / 2.0 + t * (m_[i + 1] - m_[i]) / (6.0 * h)));
}

double CubicSpline::derivative(double x) const {
    if (x <= x_.front() || x >= x_.back()) return 0.0;
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double t = x - x_[i];
    const double b = (y_[i + 1] - y_[i]) / h - h * (2.0 * m_[i] + m_[i + 1]) / 6.0;
    return b + t * (m_[i] + t * (m_[i + 1] - m_[i]) / (2.0 * h));
}

namespace {

// Lagrange weights on four consecutive integer abscissae 0..3.
inline void lagrange4(double u, double w[4]) {
    w[0] = -(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0;
    w[1] = u * (u - 2.0) * (u - 3.0) / 2.0;
    w[2] = -u * (u - 1.0) * (u - 3.0) / 2.0;
    w[3] = u * (u - 1.0) * (u - 2.0) / 6.0;
}

}

cplx sample_cubic(const std::vector<cplx>& values, double x0, double dx, SampleLayout layout,
                  double x) {
    const long n = static_cast<long>(values.size());
    const double s = (x - x0) / dx;

    if (layout == SampleLayout::DirichletInterior) {
        // Extended index space [-1, n]: walls at both ends hold zeros.
        if (s < -1.0 || s > static_cast<double>(n)) return {0.0, 0.0};
        long base = static_cast<long>(std::floor(s)) - 1;
        if (base < -1) base = -1;
        if (base > n - 3) base = n - 3;
        double w[4];
        lagrange4(s - static_cast<double>(base), w);
        cplx acc{0.0, 0.0};
        for (int k = 0; k < 4; ++k) {
            const long j = base + k;
            if (j >= 0 && j < n) acc += w[k] * values[j];
        }
        return acc;
    }

    long base = static_cast<long>(std::floor(s)) - 1;
    double w[4];
    lagrange4(s - static_cast<double>(base), w);
    cplx acc{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        const long j = ((base + k) % n + n) % n;
        acc += w[k] * values[j];
    }
    return acc;
}

}
