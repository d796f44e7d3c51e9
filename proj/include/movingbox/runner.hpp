#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "movingbox/config.hpp"

namespace movingbox {

struct RunOutcome {
    std::filesystem::path directory;
    double final_norm = 0.0;
    double final_energy = 0.0;
    double discarded_norm = 0.0;  // zeno runs only
    double seconds = 0.0;
    std::size_t n_records = 0;
};

/// Execute one configured run: resolve the output directory (never
/// overwriting an existing one), propagate, and write diagnostics.csv,
/// the manifest, and optionally snapshots/ and plotdata/. If propagation
/// throws, a manifest with status "error" is still written before the
/// exception propagates.
RunOutcome run(const RunConfig& cfg);

struct SweepEntryOutcome {
    nlohmann::json value;
    std::filesystem::path directory;
    bool ok = false;
    std::string error;
};

struct SweepOutcome {
    std::filesystem::path directory;
    std::vector<SweepEntryOutcome> entries;
    bool all_ok = true;
};

/// Expand the sweep section into one run per value, executed under a shared
/// sweep directory with a top-level manifest. Entries run in parallel;
/// individual failures are recorded and do not stop the rest.
SweepOutcome run_sweep(const RunConfig& cfg);

struct CompareEntry {
    double t = 0.0;
    double l2_distance = 0.0;
    double fidelity = 1.0;
};

struct CompareReport {
    std::vector<CompareEntry> entries;
    double max_l2 = 0.0;
    double t_at_max_l2 = 0.0;
    double min_fidelity = 1.0;
    double t_at_min_fidelity = 0.0;
};

/// Pair up the snapshot files of two runs and measure how far apart the
/// states are. Throws GridMismatch when the grids differ, TimeMismatch when
/// the snapshot times or counts differ.
CompareReport compare_runs(const std::filesystem::path& dir_a,
                           const std::filesystem::path& dir_b);

void write_compare_report(std::ostream& out, const CompareReport& report);

}
