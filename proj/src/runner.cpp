#include "movingbox/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "movingbox/errors.hpp"
#include "movingbox/propagator.hpp"
#include "movingbox/version.hpp"
#include "movingbox/zeno.hpp"

namespace movingbox {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Honor MOVINGBOX_OUTPUT_ROOT for relative paths, then pick the first free
/// name: dir, dir-2, dir-3, ... so a re-run never clobbers earlier output.
fs::path resolve_output_dir(const std::string& configured) {
    fs::path want(configured);
    if (want.is_relative()) {
        if (const char* root = std::getenv("MOVINGBOX_OUTPUT_ROOT"); root && *root)
            want = fs::path(root) / want;
    }
    if (!fs::exists(want)) return want;
    for (int k = 2; k <= 9999; ++k) {
        fs::path probe = want;
        probe += "-" + std::to_string(k);
        if (!fs::exists(probe)) return probe;
    }
    throw ValidationError("output: no free directory name near " + want.string());
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    return out;
}

void write_snapshot(const fs::path& dir, std::size_t index, const WaveField& field) {
    char name[40];
    std::snprintf(name, sizeof name, "snapshot_%06zu.dat", index);
    auto out = open_out(dir / name);
    out << "# t = " << fmt17(field.time) << "\n";
    out << "# xi re_phi im_phi\n";
    for (std::size_t j = 0; j < field.amps.size(); ++j)
        out << fmt17(field.node(j)) << ' ' << fmt17(field.amps[j].real()) << ' '
            << fmt17(field.amps[j].imag()) << '\n';
}

void write_diagnostics(const fs::path& path, const std::vector<DiagnosticsRecord>& records) {
    auto out = open_out(path);
    out << "t,norm,energy,energy_total,rate_boundary,rate_fd,rate_potential,"
           "re_dphi_left,im_dphi_left,re_dphi_right,im_dphi_right\n";
    for (const auto& r : records) {
        out << fmt17(r.t) << ',' << fmt17(r.norm) << ',' << fmt17(r.energy) << ','
            << fmt17(r.energy_total) << ',' << fmt17(r.rate_boundary) << ','
            << (r.rate_fd ? fmt17(*r.rate_fd) : "nan") << ',' << fmt17(r.rate_potential) << ','
            << fmt17(r.dphi_left.real()) << ',' << fmt17(r.dphi_left.imag()) << ','
            << fmt17(r.dphi_right.real()) << ',' << fmt17(r.dphi_right.imag()) << '\n';
    }
}

void write_plotdata(const fs::path& dir, const std::vector<DiagnosticsRecord>& records) {
    fs::create_directories(dir);
    {
        auto out = open_out(dir / "energy.dat");
        out << "# t energy_total\n";
        for (const auto& r : records) out << fmt17(r.t) << ' ' << fmt17(r.energy_total) << '\n';
    }
    {
        auto out = open_out(dir / "norm.dat");
        out << "# t norm\n";
        for (const auto& r : records) out << fmt17(r.t) << ' ' << fmt17(r.norm) << '\n';
    }
    {
        auto out = open_out(dir / "rate_boundary.dat");
        out << "# t rate_boundary\n";
        for (const auto& r : records) out << fmt17(r.t) << ' ' << fmt17(r.rate_boundary) << '\n';
    }
    {
        auto out = open_out(dir / "rate_fd.dat");
        out << "# t rate_fd\n";
        for (const auto& r : records)
            if (r.rate_fd) out << fmt17(r.t) << ' ' << fmt17(*r.rate_fd) << '\n';
    }
}

void write_manifest(const fs::path& dir, const ordered_json& manifest) {
    auto out = open_out(dir / "manifest");
    out << manifest.dump(2) << '\n';
}

void set_by_path(ordered_json& root, const std::string& dotted, const nlohmann::json& value) {
    ordered_json* node = &root;
    std::string rest = dotted;
    for (;;) {
        auto pos = rest.find('.');
        const std::string head = rest.substr(0, pos);
        if (pos == std::string::npos) {
            (*node)[head] = value;
            return;
        }
        node = &(*node)[head];
        rest = rest.substr(pos + 1);
    }
}

std::string value_label(const nlohmann::json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    for (auto& c : s)
        if (c == '/' || c == ' ') c = '_';
    return s;
}

}  // namespace

RunOutcome run(const RunConfig& cfg) {
    const fs::path dir = resolve_output_dir(cfg.output.directory);
    fs::create_directories(dir);
    const fs::path snapdir = dir / "snapshots";
    if (cfg.output.snapshots) fs::create_directories(snapdir);

    ordered_json manifest;
    manifest["kind"] = "run";
    manifest["version"] = kVersion;
    manifest["status"] = "running";
    manifest["config"] = cfg.resolved;
    manifest["grid"] = {{"n", cfg.grid_n},
                        {"interior_nodes", cfg.grid_n - 1},
                        {"spacing", 1.0 / static_cast<double>(cfg.grid_n)}};

    const auto t_start = std::chrono::steady_clock::now();
    std::vector<DiagnosticsRecord> records;
    RunOutcome outcome;
    outcome.directory = dir;

    try {
        FixedGrid grid(cfg.grid_n);
        WaveField phi0 = build_initial_state(cfg, grid);
        const PotentialSpec* pot = cfg.potential ? &*cfg.potential : nullptr;

        if (cfg.prop.method == Method::CrankNicolson) {
            std::size_t snap_index = 0;
            SnapshotObserver observer;
            if (cfg.output.snapshots)
                observer = [&](const WaveField& f, const DiagnosticsRecord&) {
                    write_snapshot(snapdir, snap_index++, f);
                };
            PropagationResult result =
                propagate(phi0, cfg.schedule, cfg.prop, pot, cfg.constants, observer);
            records = std::move(result.records);
            outcome.final_norm = result.state.norm();
            manifest["steps"] = {
                {"method", "crank_nicolson"},
                {"dt", cfg.prop.dt},
                {"n_steps", std::llround(cfg.prop.t_final / cfg.prop.dt)},
                {"snapshot_stride", cfg.prop.snapshot_stride}};
        } else {
            const Kinematics kin0 = cfg.schedule.evaluate(phi0.time);
            WaveField psi0 = frame_unmap(phi0, kin0.l, kin0.d);
            ZenoPropagator zp(psi0, cfg.schedule, cfg.prop, cfg.constants);
            std::size_t snap_index = 0;
            auto emit = [&]() {
                const Kinematics kin = cfg.schedule.evaluate(zp.time());
                WaveField phi = frame_map(zp.box_state(), kin.l, kin.d);
                records.push_back(make_record(phi, cfg.schedule, zp.time(), nullptr,
                                              cfg.constants));
                if (cfg.output.snapshots) write_snapshot(snapdir, snap_index++, phi);
                return phi;
            };
            emit();
            while (zp.slice() < zp.slices()) {
                zp.advance();
                if (zp.slice() % cfg.prop.snapshot_stride == 0 || zp.slice() == zp.slices())
                    emit();
            }
            outcome.discarded_norm = zp.discarded();
            outcome.final_norm = records.back().norm;
            manifest["steps"] = {
                {"method", "zeno"},
                {"zeno_slices", zp.slices()},
                {"slice_dt", zp.slice_dt()},
                {"snapshot_stride", cfg.prop.snapshot_stride}};
            manifest["discarded_norm"] = outcome.discarded_norm;
        }
        finalize_fd_rates(records);
        outcome.final_energy = records.back().energy_total;
    } catch (const std::exception& e) {
        manifest["status"] = "error";
        manifest["error"] = e.what();
        manifest["partial_outputs"] = true;
        if (!records.empty()) {
            finalize_fd_rates(records);
            write_diagnostics(dir / "diagnostics.csv", records);
        }
        write_manifest(dir, manifest);
        throw;
    }

    outcome.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    outcome.n_records = records.size();

    write_diagnostics(dir / "diagnostics.csv", records);
    if (cfg.output.plotdata) write_plotdata(dir / "plotdata", records);

    manifest["status"] = "complete";
    manifest["partial_outputs"] = false;
    manifest["t0"] = records.front().t;
    manifest["t_end"] = records.back().t;
    manifest["emitted_records"] = records.size();
    manifest["final_norm"] = outcome.final_norm;
    manifest["final_energy"] = outcome.final_energy;
    manifest["wall_clock_seconds"] = outcome.seconds;
    manifest["outputs"] = {{"diagnostics", "diagnostics.csv"},
                           {"snapshots", cfg.output.snapshots},
                           {"plotdata", cfg.output.plotdata}};
    write_manifest(dir, manifest);
    return outcome;
}

SweepOutcome run_sweep(const RunConfig& cfg) {
    if (!cfg.sweep) throw ValidationError("sweep: config has no sweep section");
    const SweepSpec& spec = *cfg.sweep;

    SweepOutcome sweep;
    sweep.directory = resolve_output_dir(cfg.output.directory);
    fs::create_directories(sweep.directory);

    // Each entry is the base config with the swept key overridden and its
    // output pinned inside the sweep directory (absolute, so the root env
    // var is not applied twice).
    std::vector<RunConfig> entry_cfgs;
    sweep.entries.resize(spec.values.size());
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        ordered_json entry = cfg.resolved;
        entry.erase("sweep");
        set_by_path(entry, spec.parameter, spec.values[i]);
        const std::string label = spec.parameter + "=" + value_label(spec.values[i]);
        entry["output"]["directory"] = fs::absolute(sweep.directory / label).string();
        sweep.entries[i].value = spec.values[i];
        sweep.entries[i].directory = sweep.directory / label;
        entry_cfgs.push_back(parse_config_text(entry.dump(), cfg.base_dir));
    }

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < entry_cfgs.size(); ++i) {
        try {
            RunOutcome r = run(entry_cfgs[i]);
            sweep.entries[i].ok = true;
            sweep.entries[i].directory = r.directory;
        } catch (const std::exception& e) {
            sweep.entries[i].ok = false;
            sweep.entries[i].error = e.what();
        }
    }

    ordered_json manifest;
    manifest["kind"] = "sweep";
    manifest["version"] = kVersion;
    manifest["parameter"] = spec.parameter;
    manifest["config"] = cfg.resolved;
    ordered_json entries = ordered_json::array();
    for (const auto& e : sweep.entries) {
        sweep.all_ok = sweep.all_ok && e.ok;
        ordered_json row;
        row["value"] = e.value;
        row["directory"] = e.directory.filename().string();
        row["status"] = e.ok ? "complete" : "error";
        if (!e.ok) row["error"] = e.error;
        entries.push_back(std::move(row));
    }
    manifest["entries"] = std::move(entries);
    manifest["status"] = sweep.all_ok ? "complete" : "error";
    write_manifest(sweep.directory, manifest);
    return sweep;
}

namespace {

struct Snapshot {
    double t = 0.0;
    std::vector<double> xi;
    std::vector<cplx> amps;
};

Snapshot read_snapshot(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open snapshot " + path.string());
    Snapshot snap;
    std::string line;
    bool saw_time = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            std::istringstream header(line.substr(1));
            std::string word, eq;
            if (header >> word >> eq && word == "t" && eq == "=" && (header >> snap.t))
                saw_time = true;
            continue;
        }
        std::istringstream row(line);
        double x, re, im;
        if (row >> x >> re >> im) {
            snap.xi.push_back(x);
            snap.amps.push_back(cplx{re, im});
        }
    }
    if (!saw_time) throw ParseError("snapshot " + path.string() + " has no \"# t = ...\" header");
    if (snap.xi.size() < 2) throw ParseError("snapshot " + path.string() + " has too few rows");
    return snap;
}

std::vector<fs::path> list_snapshots(const fs::path& run_dir) {
    const fs::path dir = run_dir / "snapshots";
    if (!fs::is_directory(dir))
        throw ValidationError("compare: no snapshots directory under " + run_dir.string() +
                              " (run with output.snapshots = true)");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".dat") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ValidationError("compare: no snapshot files under " + dir.string());
    return files;
}

}  // namespace

CompareReport compare_runs(const fs::path& dir_a, const fs::path& dir_b) {
    const auto files_a = list_snapshots(dir_a);
    const auto files_b = list_snapshots(dir_b);
    if (files_a.size() != files_b.size())
        throw TimeMismatch("compare: " + std::to_string(files_a.size()) + " snapshots vs " +
                           std::to_string(files_b.size()));

    CompareReport report;
    for (std::size_t i = 0; i < files_a.size(); ++i) {
        const Snapshot a = read_snapshot(files_a[i]);
        const Snapshot b = read_snapshot(files_b[i]);
        if (a.xi.size() != b.xi.size())
            throw GridMismatch("compare: " + files_a[i].filename().string() + " has " +
                               std::to_string(a.xi.size()) + " nodes, " +
                               files_b[i].filename().string() + " has " +
                               std::to_string(b.xi.size()));
        for (std::size_t j = 0; j < a.xi.size(); ++j)
            if (std::abs(a.xi[j] - b.xi[j]) > 1e-9)
                throw GridMismatch("compare: node mismatch in " +
                                   files_a[i].filename().string());
        if (std::abs(a.t - b.t) > 1e-9 * std::max(1.0, std::abs(a.t)))
            throw TimeMismatch("compare: snapshot times " + fmt17(a.t) + " vs " + fmt17(b.t) +
                               " in " + files_a[i].filename().string());

        const double h = a.xi[1] - a.xi[0];
        double dist2 = 0.0, na2 = 0.0, nb2 = 0.0;
        cplx overlap{0.0, 0.0};
        for (std::size_t j = 0; j < a.amps.size(); ++j) {
            dist2 += std::norm(a.amps[j] - b.amps[j]);
            na2 += std::norm(a.amps[j]);
            nb2 += std::norm(b.amps[j]);
            overlap += std::conj(a.amps[j]) * b.amps[j];
        }
        CompareEntry entry;
        entry.t = a.t;
        entry.l2_distance = std::sqrt(h * dist2);
        const double denom = std::sqrt(na2 * nb2);
        entry.fidelity = denom > 0.0 ? std::abs(overlap) / denom : 0.0;
        report.entries.push_back(entry);

        if (entry.l2_distance >= report.max_l2) {
            report.max_l2 = entry.l2_distance;
            report.t_at_max_l2 = entry.t;
        }
        if (entry.fidelity <= report.min_fidelity) {
            report.min_fidelity = entry.fidelity;
            report.t_at_min_fidelity = entry.t;
        }
    }
    return report;
}

void write_compare_report(std::ostream& out, const CompareReport& report) {
    char buf[160];
    out << "snapshots compared: " << report.entries.size() << "\n";
    out << "        t            l2_distance      fidelity\n";
    for (const auto& e : report.entries) {
        std::snprintf(buf, sizeof buf, "%15.8g %15.6e %15.12f\n", e.t, e.l2_distance, e.fidelity);
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "worst l2 distance %.6e at t = %.8g\n", report.max_l2,
                  report.t_at_max_l2);
    out << buf;
    std::snprintf(buf, sizeof buf, "lowest fidelity %.12f at t = %.8g\n", report.min_fidelity,
                  report.t_at_min_fidelity);
    out << buf;
}

}
