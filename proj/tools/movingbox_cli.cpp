#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "movingbox/config.hpp"
#include "movingbox/errors.hpp"
#include "movingbox/kernels.hpp"
#include "movingbox/presets.hpp"
#include "movingbox/runner.hpp"
#include "movingbox/version.hpp"

namespace {

movingbox::RunConfig load_config(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return movingbox::parse_config(arg);
    if (const movingbox::Preset* p = movingbox::find_preset(arg))
        return movingbox::parse_config_text(p->text, fs::current_path());
    throw movingbox::ParseError("no config file or preset named \"" + arg +
                                "\" (see `movingbox presets list`)");
}

void print_outcome(const movingbox::RunConfig& cfg, const movingbox::RunOutcome& out) {
    std::printf("output directory: %s\n", out.directory.string().c_str());
    std::printf("records: %zu   final norm: %.12g   final energy: %.12g\n", out.n_records,
                out.final_norm, out.final_energy);
    if (cfg.prop.method == movingbox::Method::Zeno)
        std::printf("discarded norm fraction: %.6g\n", out.discarded_norm);
    std::printf("wall clock: %.3f s\n", out.seconds);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"movingbox: a quantum particle between moving walls"};
    app.set_version_flag("--version", std::string("movingbox ") + movingbox::kVersion);
    app.require_subcommand(1);
    bool serial = false;
    app.add_flag("--serial", serial, "use the serial reference kernels");

    std::string run_arg, sweep_arg, dir_a, dir_b, preset_name;

    auto* run_cmd = app.add_subcommand("run", "execute one configured run");
    run_cmd->add_option("config", run_arg, "config file path or preset name")->required();

    auto* sweep_cmd =
        app.add_subcommand("sweep", "expand the config's sweep section into one run per value");
    sweep_cmd->add_option("config", sweep_arg, "config file path or preset name")->required();

    auto* compare_cmd =
        app.add_subcommand("compare", "pair up two runs' snapshots and report their distance");
    compare_cmd->add_option("dir_a", dir_a, "first run directory")->required();
    compare_cmd->add_option("dir_b", dir_b, "second run directory")->required();

    auto* presets_cmd = app.add_subcommand("presets", "list or show the built-in configs");
    presets_cmd->require_subcommand(1);
    presets_cmd->add_subcommand("list", "name and summary of each preset");
    auto* show_cmd = presets_cmd->add_subcommand("show", "print a preset config");
    show_cmd->add_option("name", preset_name, "preset name")->required();

    CLI11_PARSE(app, argc, argv);

    if (serial) movingbox::kernels::execution_policy() = movingbox::kernels::Exec::Serial;

    try {
        if (run_cmd->parsed()) {
            movingbox::RunConfig cfg = load_config(run_arg);
            print_outcome(cfg, movingbox::run(cfg));
        } else if (sweep_cmd->parsed()) {
            movingbox::RunConfig cfg = load_config(sweep_arg);
            movingbox::SweepOutcome sweep = movingbox::run_sweep(cfg);
            std::printf("sweep directory: %s\n", sweep.directory.string().c_str());
            for (const auto& e : sweep.entries) {
                if (e.ok)
                    std::printf("  %s: complete\n", e.directory.filename().string().c_str());
                else
                    std::printf("  %s: error (%s)\n", e.directory.filename().string().c_str(),
                                e.error.c_str());
            }
            if (!sweep.all_ok) return 1;
        } else if (compare_cmd->parsed()) {
            movingbox::CompareReport report = movingbox::compare_runs(dir_a, dir_b);
            movingbox::write_compare_report(std::cout, report);
        } else {
            if (app.get_subcommand("presets")->get_subcommand("show")->parsed()) {
                const movingbox::Preset* p = movingbox::find_preset(preset_name);
                if (!p)
                    throw movingbox::ParseError("no preset named \"" + preset_name +
                                                "\" (see `movingbox presets list`)");
                std::fputs(p->text, stdout);
                std::fputc('\n', stdout);
            } else {
                for (const auto& p : movingbox::presets())
                    std::printf("%-18s %s\n", p.name, p.summary);
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
