#include "movingbox/banded.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "movingbox/errors.hpp"

namespace movingbox {

HermitianBanded& HermitianBanded::add_scaled(double alpha, const HermitianBanded& other) {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < diag_.size(); ++i) diag_[i] += alpha * other.diag_[i];
    for (std::size_t i = 0; i < up1_.size(); ++i) up1_[i] += alpha * other.up1_[i];
    for (std::size_t i = 0; i < up2_.size(); ++i) up2_[i] += alpha * other.up2_[i];
    return *this;
}

HermitianBanded& HermitianBanded::scale(double alpha) {
    for (auto& v : diag_) v *= alpha;
    for (auto& v : up1_) v *= alpha;
    for (auto& v : up2_) v *= alpha;
    return *this;
}

double HermitianBanded::max_abs() const {
    double m = 0.0;
    for (double v : diag_) m = std::max(m, std::abs(v));
    for (const cplx& v : up1_) m = std::max(m, std::abs(v));
    for (const cplx& v : up2_) m = std::max(m, std::abs(v));
    return m;
}

BandedSystem::BandedSystem(std::size_t n) : n_(n) {
    for (auto& b : band_) b.assign(n, cplx{0.0, 0.0});
}

BandedSystem BandedSystem::cayley_lhs(const HermitianBanded& h, cplx c) {
    const std::size_t n = h.dim();
    BandedSystem s(n);
    for (std::size_t i = 0; i < n; ++i) s.band_[2][i] = 1.0 + c * h.diag()[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        s.band_[3][i] = c * h.up1()[i];              // A[i, i+1]
        s.band_[1][i + 1] = c * std::conj(h.up1()[i]);  // A[i+1, i]
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        s.band_[4][i] = c * h.up2()[i];              // A[i, i+2]
        s.band_[0][i + 2] = c * std::conj(h.up2()[i]);  // A[i+2, i]
    }
    s.scale_ = std::max(1.0, std::abs(c) * h.max_abs());
    return s;
}

void BandedSystem::factorize() {
    // Banded Gaussian elimination, no pivoting; multipliers overwrite the
    // subdiagonal bands, the updated upper triangle stays in place.
    auto at = [&](std::size_t i, std::size_t j) -> cplx& {
        return band_[j + 2 - i][i];
    };
    const double tiny = 1e-14 * scale_;
    for (std::size_t k = 0; k < n_; ++k) {
        const cplx piv = at(k, k);
        if (std::abs(piv) <= tiny)
            throw SolveFailure("banded solve: singular pivot at row " + std::to_string(k));
        const std::size_t imax = std::min(k + 2, n_ - 1);
        for (std::size_t i = k + 1; i <= imax && i < n_; ++i) {
            const cplx m = at(i, k) / piv;
            at(i, k) = m;
            const std::size_t jmax = std::min(k + 2, n_ - 1);
            for (std::size_t j = k + 1; j <= jmax; ++j) at(i, j) -= m * at(k, j);
        }
    }
    factored_ = true;
}

void BandedSystem::solve(std::vector<cplx>& rhs) const {
    assert(factored_);
    assert(rhs.size() == n_);
    auto at = [&](std::size_t i, std::size_t j) -> const cplx& {
        return band_[j + 2 - i][i];
    };
    // Forward substitution with the stored multipliers.
    for (std::size_t i = 1; i < n_; ++i) {
        const std::size_t k0 = i >= 2 ? i - 2 : 0;
        for (std::size_t k = k0; k < i; ++k) rhs[i] -= at(i, k) * rhs[k];
    }
    // Back substitution.
    for (std::size_t ii = n_; ii-- > 0;) {
        const std::size_t jmax = std::min(ii + 2, n_ - 1);
        for (std::size_t j = ii + 1; j <= jmax && j < n_; ++j) rhs[ii] -= at(ii, j) * rhs[j];
        rhs[ii] /= at(ii, ii);
    }
}

}
