#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "movingbox/potential.hpp"
#include "movingbox/propagator.hpp"
#include "movingbox/schedule.hpp"
#include "movingbox/wavefield.hpp"

namespace movingbox {

struct OutputOptions {
    std::string directory = "run";
    bool snapshots = false;
    bool plotdata = true;
};

struct SweepSpec {
    std::string parameter;                // dotted path, e.g. "schedule.v"
    std::vector<nlohmann::json> values;
};

/// A fully validated run description. `resolved` echoes the input with all
/// defaults filled in; it is what the manifest records and what sweeps
/// clone before overriding the swept key.
struct RunConfig {
    nlohmann::ordered_json resolved;
    std::filesystem::path base_dir;  // directory config-relative paths resolve against

    WallSchedule schedule = WallSchedule::static_box(1.0);
    std::size_t grid_n = 512;
    PhysicalConstants constants;
    PropagatorConfig prop;

    enum class InitKind { Mode, Superposition, File };
    InitKind init_kind = InitKind::Mode;
    int mode = 1;
    std::vector<std::pair<int, cplx>> superposition;
    std::filesystem::path state_file;

    std::optional<PotentialSpec> potential;

    OutputOptions output;
    std::optional<SweepSpec> sweep;
};

/// Parse and validate a config file (JSON with // comments allowed).
/// Throws ParseError for malformed input, ValidationError for violated
/// constraints. Relative paths inside the config resolve against the
/// config file's directory.
RunConfig parse_config(const std::filesystem::path& path);

/// Same, from in-memory text (presets, sweep expansion, tests).
RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir);

/// Realize the configured initial state on a grid. Mode indices outside
/// [1, N-1] throw BadMode; superpositions and file states are normalized,
/// with a warning on stderr when the input norm is off by more than 1e-6.
WaveField build_initial_state(const RunConfig& cfg, const FixedGrid& grid);

}
