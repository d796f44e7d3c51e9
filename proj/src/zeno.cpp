#include "movingbox/zeno.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "movingbox/errors.hpp"
#include "movingbox/interp.hpp"
#include "movingbox/kernels.hpp"

namespace movingbox {

namespace {
// FFTW plan creation and destruction are not thread-safe; execution is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}
}

struct ZenoPropagator::FftPlans {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;

    FftPlans(std::size_t m, cplx* buf) {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        auto* p = reinterpret_cast<fftw_complex*>(buf);
        forward = fftw_plan_dft_1d(static_cast<int>(m), p, p, FFTW_FORWARD, FFTW_ESTIMATE);
        backward = fftw_plan_dft_1d(static_cast<int>(m), p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    ~FftPlans() {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        if (forward) fftw_destroy_plan(forward);
        if (backward) fftw_destroy_plan(backward);
    }
};

ZenoPropagator::ZenoPropagator(const WaveField& psi0, const WallSchedule& schedule,
                               const PropagatorConfig& config, const PhysicalConstants& consts)
    : grid_(psi0.grid),
      schedule_(schedule),
      consts_(consts),
      n_slices_(config.zeno_slices),
      tau_(config.t_final / static_cast<double>(config.zeno_slices)),
      t0_(psi0.time),
      m_(config.line_grid_points),
      half_(config.line_box_halfwidth),
      dx_(2.0 * config.line_box_halfwidth / static_cast<double>(config.line_grid_points)),
      max_discarded_(config.max_discarded) {
    if (psi0.frame != Frame::MovingWall)
        throw ValidationError("zeno: expected a moving-frame initial state");
    if (n_slices_ < 1) throw ValidationError("zeno: zeno_slices must be at least 1");
    if (m_ < 16) throw ValidationError("zeno: line_grid_points must be at least 16");
    if (!(half_ > 0.0)) throw ValidationError("zeno: line_box_halfwidth must be positive");
    if (!(max_discarded_ > 0.0 && max_discarded_ <= 1.0))
        throw ValidationError("zeno: max_discarded must be in (0, 1]");
    if (!(config.t_final >= 0.0)) throw ValidationError("zeno: t_final must be nonnegative");

    // Every scheduled interval must sit inside the line box.
    for (std::size_t k = 0; k <= n_slices_; ++k) {
        const Kinematics kin = schedule_.evaluate(t0_ + static_cast<double>(k) * tau_);
        if (std::abs(kin.d) + 0.5 * kin.l >= half_)
            throw ValidationError(
                "zeno: scheduled interval leaves the line box at t = " +
                std::to_string(t0_ + static_cast<double>(k) * tau_) +
                "; enlarge line_box_halfwidth");
    }

    // Embed the interval state on the line.
    line_.assign(m_, cplx{0.0, 0.0});
    const double x0 = psi0.node(0);
    const double dxs = psi0.spacing();
    for (std::size_t i = 0; i < m_; ++i) {
        const double x = -half_ + static_cast<double>(i) * dx_;
        line_[i] = sample_cubic(psi0.amps, x0, dxs, SampleLayout::DirichletInterior, x);
    }
    initial_norm2_ = dx_ * kernels::norm2sq(line_);
    if (!(initial_norm2_ > 0.0)) throw ValidationError("zeno: initial state has zero norm");

    // Free-flight multiplier per Fourier mode, with the inverse-transform
    // 1/M normalization folded in: exp(-i hbar k^2 tau / (2 m)) / M.
    flight_.resize(m_);
    const double dk = std::numbers::pi / half_;  // 2 pi / L
    for (std::size_t j = 0; j < m_; ++j) {
        const double f = (j <= m_ / 2) ? static_cast<double>(j)
                                       : static_cast<double>(j) - static_cast<double>(m_);
        const double k = dk * f;
        const double theta = -consts_.hbar * k * k * tau_ / (2.0 * consts_.mass);
        flight_[j] = cplx{std::cos(theta), std::sin(theta)} / static_cast<double>(m_);
    }

    mask_.assign(m_, 0.0);
    plans_ = std::make_unique<FftPlans>(m_, line_.data());

    project(t0_);  // the leading projection of the product formula
}

ZenoPropagator::~ZenoPropagator() = default;

void ZenoPropagator::project(double t) {
    const Kinematics kin = schedule_.evaluate(t);
    const double a = kin.d - 0.5 * kin.l;
    const double b = kin.d + 0.5 * kin.l;
    const double halfcell = 0.5 * dx_;
    for (std::size_t i = 0; i < m_; ++i) {
        const double x = -half_ + static_cast<double>(i) * dx_;
        double w;
        if (std::abs(x - a) < halfcell || std::abs(x - b) < halfcell)
            w = 0.5;  // wall lands within half a cell: split the node
        else
            w = (x > a && x < b) ? 1.0 : 0.0;
        mask_[i] = w;
    }
    kernels::hadamard_real(mask_, line_);

    const double frac = discarded();
    if (frac > max_discarded_)
        throw LeakageTooLarge("zeno: discarded norm fraction " + std::to_string(frac) +
                              " exceeds bound " + std::to_string(max_discarded_) + " at t = " +
                              std::to_string(t));
}

void ZenoPropagator::free_flight() {
    fftw_execute(plans_->forward);
    kernels::hadamard(flight_, line_);
    fftw_execute(plans_->backward);
}

void ZenoPropagator::advance() {
    if (slice_ >= n_slices_) throw ValidationError("zeno: propagation already complete");
    free_flight();
    ++slice_;
    project(time());
}

double ZenoPropagator::discarded() const {
    const double now = dx_ * kernels::norm2sq(line_);
    return 1.0 - now / initial_norm2_;
}

WaveField ZenoPropagator::box_state() const {
    const Kinematics kin = schedule_.evaluate(time());
    WaveField out(grid_, Frame::MovingWall, time(), kin.l, kin.d);
    for (std::size_t j = 0; j < out.amps.size(); ++j)
        out.amps[j] = sample_cubic(line_, -half_, dx_, SampleLayout::Periodic, out.node(j));
    out.normalize();
    return out;
}

ZenoResult zeno_propagate(const WaveField& psi0, const WallSchedule& schedule,
                          const PropagatorConfig& config, const PhysicalConstants& consts) {
    ZenoPropagator zp(psi0, schedule, config, consts);
    while (zp.slice() < zp.slices()) zp.advance();
    return {zp.box_state(), zp.discarded()};
}

}
