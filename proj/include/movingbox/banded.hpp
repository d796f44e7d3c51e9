#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "movingbox/grid.hpp"

namespace movingbox {

/// Hermitian matrix with bandwidth <= 2, stored as the real diagonal plus
/// the first and second superdiagonals. The lower triangle is implied by
/// conjugate symmetry, so assembled operators are Hermitian by construction.
class HermitianBanded {
public:
    explicit HermitianBanded(std::size_t n)
        : n_(n),
          diag_(n, 0.0),
          up1_(n > 1 ? n - 1 : 0, cplx{0.0, 0.0}),
          up2_(n > 2 ? n - 2 : 0, cplx{0.0, 0.0}) {}

    std::size_t dim() const { return n_; }

    std::vector<double>& diag() { return diag_; }
    const std::vector<double>& diag() const { return diag_; }
    std::vector<cplx>& up1() { return up1_; }
    const std::vector<cplx>& up1() const { return up1_; }
    std::vector<cplx>& up2() { return up2_; }
    const std::vector<cplx>& up2() const { return up2_; }

    /// this += alpha * other. Real alpha keeps the matrix Hermitian.
    HermitianBanded& add_scaled(double alpha, const HermitianBanded& other);

    HermitianBanded& scale(double alpha);

    /// Largest entry magnitude over the stored bands.
    double max_abs() const;

private:
    std::size_t n_;
    std::vector<double> diag_;
    std::vector<cplx> up1_;
    std::vector<cplx> up2_;
};

/// General pentadiagonal complex system; holds the implicit half of the
/// Cayley step, I + c*H, and solves it by banded LU without pivoting.
/// The Cayley matrices are normal with eigenvalues 1 + c*lambda (lambda
/// real, c imaginary), so pivoting is not needed for stability.
class BandedSystem {
public:
    /// Build I + c*H.
    static BandedSystem cayley_lhs(const HermitianBanded& h, cplx c);

    /// In-place LU. Throws SolveFailure on a numerically singular pivot.
    void factorize();

    /// Solve A x = rhs in place. Requires factorize() first.
    void solve(std::vector<cplx>& rhs) const;

    std::size_t dim() const { return n_; }

private:
    explicit BandedSystem(std::size_t n);

    // band_[k + 2][i] holds A[i, i + k] for offsets k in [-2, 2].
    std::size_t n_ = 0;
    std::array<std::vector<cplx>, 5> band_;
    double scale_ = 0.0;
    bool factored_ = false;
};

}
