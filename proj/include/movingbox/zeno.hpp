#pragma once

#include <memory>
#include <vector>

#include "movingbox/propagator.hpp"
#include "movingbox/schedule.hpp"
#include "movingbox/wavefield.hpp"

namespace movingbox {

struct ZenoResult {
    WaveField state;        // moving-frame field on the final interval, renormalized
    double discarded_norm;  // fraction of the initial norm^2 removed by projections
};

/// Product-formula evolution on the full line: alternate free flights
/// exp(-i T tau / hbar), done spectrally on a periodic box [-h, h], with
/// sharp restrictions to the instantaneous interval. Converges to the
/// moving-wall dynamics as the slice count grows; serves as an independent
/// cross-check of the Crank-Nicolson route.
class ZenoPropagator {
public:
    ZenoPropagator(const WaveField& psi0, const WallSchedule& schedule,
                   const PropagatorConfig& config, const PhysicalConstants& consts = {});
    ~ZenoPropagator();

    ZenoPropagator(const ZenoPropagator&) = delete;
    ZenoPropagator& operator=(const ZenoPropagator&) = delete;

    /// One slice: free flight then projection. Throws LeakageTooLarge when
    /// the cumulative discarded norm passes the configured bound.
    void advance();

    std::size_t slice() const { return slice_; }
    std::size_t slices() const { return n_slices_; }
    double slice_dt() const { return tau_; }
    double time() const { return t0_ + static_cast<double>(slice_) * tau_; }
    double discarded() const;

    /// Current state restricted to the instantaneous interval, renormalized.
    WaveField box_state() const;

private:
    void project(double t);
    void free_flight();

    FixedGrid grid_;
    WallSchedule schedule_;
    PhysicalConstants consts_;
    std::size_t n_slices_;
    double tau_;
    double t0_;
    std::size_t slice_ = 0;

    std::size_t m_;      // line grid points
    double half_;        // line box [-half, half]
    double dx_;
    double max_discarded_;
    double initial_norm2_;
    std::vector<cplx> line_;
    std::vector<cplx> flight_;  // per-mode free-flight multiplier, 1/M folded in
    std::vector<double> mask_;

    struct FftPlans;
    std::unique_ptr<FftPlans> plans_;
};

/// Run all slices and return the final interval state plus the discarded norm.
ZenoResult zeno_propagate(const WaveField& psi0, const WallSchedule& schedule,
                          const PropagatorConfig& config, const PhysicalConstants& consts = {});

}
