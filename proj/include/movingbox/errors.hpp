#pragma once

#include <stdexcept>
#include <string>

namespace movingbox {

/// Wall separation dropped below the configured floor, or walls crossed.
struct WallCollision : std::runtime_error {
    explicit WallCollision(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation time outside a tabulated schedule's sample window.
struct OutOfWindow : std::runtime_error {
    explicit OutOfWindow(const std::string& what) : std::runtime_error(what) {}
};

/// Banded linear system was numerically singular.
struct SolveFailure : std::runtime_error {
    explicit SolveFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Projection steps discarded more norm than the configured bound.
struct LeakageTooLarge : std::runtime_error {
    explicit LeakageTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// A time-dependent potential was used where dV/dt is required but unavailable.
struct MissingTimeDerivative : std::runtime_error {
    explicit MissingTimeDerivative(const std::string& what) : std::runtime_error(what) {}
};

/// Config file is not well-formed (syntax, types, unreadable).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Config is well-formed but violates a physical or structural constraint.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested box eigenmode index is out of range.
struct BadMode : std::runtime_error {
    explicit BadMode(const std::string& what) : std::runtime_error(what) {}
};

/// Two runs being compared used different spatial grids.
struct GridMismatch : std::runtime_error {
    explicit GridMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Two runs being compared emitted snapshots at different times.
struct TimeMismatch : std::runtime_error {
    explicit TimeMismatch(const std::string& what) : std::runtime_error(what) {}
};

}
