#include "movingbox/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "movingbox/errors.hpp"
#include "movingbox/interp.hpp"

namespace movingbox {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("config: " + where + ": " + what);
}

void reject_unknown(const json& section, const std::string& name,
                    const std::set<std::string>& allowed) {
    for (const auto& [key, value] : section.items()) {
        (void)value;
        if (!allowed.count(key))
            fail(name, "unknown key \"" + key + "\"");
    }
}

double get_number(const json& section, const std::string& name, const std::string& key,
                  double fallback) {
    if (!section.contains(key)) return fallback;
    const auto& v = section.at(key);
    if (!v.is_number()) fail(name, "\"" + key + "\" must be a number");
    return v.get<double>();
}

double require_number(const json& section, const std::string& name, const std::string& key) {
    if (!section.contains(key)) fail(name, "missing required key \"" + key + "\"");
    const auto& v = section.at(key);
    if (!v.is_number()) fail(name, "\"" + key + "\" must be a number");
    return v.get<double>();
}

bool get_bool(const json& section, const std::string& name, const std::string& key,
              bool fallback) {
    if (!section.contains(key)) return fallback;
    const auto& v = section.at(key);
    if (!v.is_boolean()) fail(name, "\"" + key + "\" must be true or false");
    return v.get<bool>();
}

std::string get_string(const json& section, const std::string& name, const std::string& key,
                       const std::string& fallback) {
    if (!section.contains(key)) return fallback;
    const auto& v = section.at(key);
    if (!v.is_string()) fail(name, "\"" + key + "\" must be a string");
    return v.get<std::string>();
}

std::string require_string(const json& section, const std::string& name, const std::string& key) {
    if (!section.contains(key)) fail(name, "missing required key \"" + key + "\"");
    const auto& v = section.at(key);
    if (!v.is_string()) fail(name, "\"" + key + "\" must be a string");
    return v.get<std::string>();
}

/// Two-or-three-column whitespace table: t l [d]. '#' lines are comments.
void read_wall_table(const std::filesystem::path& path, std::vector<double>& t,
                     std::vector<double>& l, std::vector<double>& d) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open wall table " + path.string());
    std::string line;
    bool saw_d = false;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream row(line);
        double tv, lv, dv;
        if (!(row >> tv >> lv)) continue;
        t.push_back(tv);
        l.push_back(lv);
        if (row >> dv) {
            saw_d = true;
            d.push_back(dv);
        } else {
            d.push_back(0.0);
        }
    }
    if (t.size() < 2) throw ParseError("wall table " + path.string() + " needs at least 2 rows");
    if (saw_d && d.size() != t.size())
        throw ParseError("wall table " + path.string() + " mixes 2- and 3-column rows");
}

WallSchedule parse_schedule(const json& sec, const std::filesystem::path& base_dir,
                            double t_final) {
    reject_unknown(sec, "schedule",
                   {"kind", "l0", "d0", "v", "g", "amplitude", "omega", "pin_left_wall", "path",
                    "l_min"});
    const std::string kind = require_string(sec, "schedule", "kind");
    const double l_min = get_number(sec, "schedule", "l_min", kDefaultLMin);
    if (l_min <= 0.0) fail("schedule", "\"l_min\" must be positive");

    auto check_l0 = [&](double l0) {
        if (!(l0 >= l_min)) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "l_min violated: l0 = %g is below l_min = %g", l0,
                          l_min);
            fail("schedule", buf);
        }
    };

    WallSchedule sched = WallSchedule::static_box(1.0);
    if (kind == "static") {
        const double l0 = get_number(sec, "schedule", "l0", 1.0);
        check_l0(l0);
        sched = WallSchedule::static_box(l0, get_number(sec, "schedule", "d0", 0.0));
    } else if (kind == "linear_translation") {
        const double l0 = get_number(sec, "schedule", "l0", 1.0);
        check_l0(l0);
        sched = WallSchedule::linear_translation(l0, get_number(sec, "schedule", "d0", 0.0),
                                                 require_number(sec, "schedule", "v"));
    } else if (kind == "uniform_acceleration") {
        const double l0 = get_number(sec, "schedule", "l0", 1.0);
        check_l0(l0);
        sched = WallSchedule::uniform_acceleration(l0, get_number(sec, "schedule", "d0", 0.0),
                                                   require_number(sec, "schedule", "g"));
    } else if (kind == "linear_expansion") {
        const double l0 = get_number(sec, "schedule", "l0", 1.0);
        const double v = require_number(sec, "schedule", "v");
        check_l0(l0);
        // Width is linear in t, so checking both endpoints covers the run.
        const double l_end = l0 + v * t_final;
        if (!(l_end >= l_min)) {
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "l_min violated: width reaches %g at t = %g (l_min = %g)", l_end,
                          t_final, l_min);
            fail("schedule", buf);
        }
        sched = WallSchedule::linear_expansion(l0, v, get_number(sec, "schedule", "d0", 0.0),
                                               get_bool(sec, "schedule", "pin_left_wall", false));
    } else if (kind == "sinusoidal_expansion") {
        const double l0 = get_number(sec, "schedule", "l0", 1.0);
        const double amp = require_number(sec, "schedule", "amplitude");
        check_l0(l0);
        if (!(l0 - std::abs(amp) >= l_min)) {
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "l_min violated: width reaches %g over the oscillation (l_min = %g)",
                          l0 - std::abs(amp), l_min);
            fail("schedule", buf);
        }
        sched = WallSchedule::sinusoidal_expansion(l0, amp, require_number(sec, "schedule", "omega"),
                                                   get_number(sec, "schedule", "d0", 0.0));
    } else if (kind == "tabulated") {
        auto path = base_dir / require_string(sec, "schedule", "path");
        std::vector<double> t, l, d;
        read_wall_table(path, t, l, d);
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (!(l[i] >= l_min)) {
                char buf[200];
                std::snprintf(buf, sizeof buf,
                              "l_min violated: tabulated width %g at t = %g (l_min = %g)", l[i],
                              t[i], l_min);
                fail("schedule", buf);
            }
        }
        sched = WallSchedule::tabulated(t, l, d);
    } else {
        fail("schedule", "unknown kind \"" + kind + "\"");
    }
    sched.set_l_min(l_min);
    return sched;
}

PotentialSpec parse_potential(const json& sec, const std::filesystem::path& base_dir) {
    reject_unknown(sec, "potential", {"preset", "slope", "offset", "k", "x0", "path"});
    const std::string preset = require_string(sec, "potential", "preset");
    if (preset == "linear") {
        return linear_potential(require_number(sec, "potential", "slope"),
                                get_number(sec, "potential", "offset", 0.0));
    }
    if (preset == "harmonic") {
        return harmonic_potential(require_number(sec, "potential", "k"),
                                  get_number(sec, "potential", "x0", 0.0));
    }
    if (preset == "table") {
        auto path = base_dir / require_string(sec, "potential", "path");
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open potential table " + path.string());
        std::vector<double> x, v;
        std::string line;
        while (std::getline(in, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            std::istringstream row(line);
            double xv, vv;
            if (row >> xv >> vv) {
                x.push_back(xv);
                v.push_back(vv);
            }
        }
        if (x.size() < 2)
            throw ParseError("potential table " + path.string() + " needs at least 2 rows");
        return table_potential(x, v);
    }
    fail("potential", "unknown preset \"" + preset + "\"");
}

RunConfig parse_json(json root, const std::filesystem::path& base_dir) {
    if (!root.is_object()) throw ParseError("config root must be a JSON object");
    reject_unknown(root, "top level",
                   {"schedule", "grid", "propagation", "initial_state", "potential", "output",
                    "sweep"});

    RunConfig cfg;
    cfg.base_dir = base_dir;

    const json grid = root.value("grid", json::object());
    reject_unknown(grid, "grid", {"n", "hbar", "mass"});
    {
        double n = get_number(grid, "grid", "n", 512.0);
        if (n < 8.0 || n != std::floor(n)) fail("grid", "\"n\" must be an integer >= 8");
        cfg.grid_n = static_cast<std::size_t>(n);
        cfg.constants.hbar = get_number(grid, "grid", "hbar", 1.0);
        cfg.constants.mass = get_number(grid, "grid", "mass", 1.0);
        if (!(cfg.constants.hbar > 0.0)) fail("grid", "\"hbar\" must be positive");
        if (!(cfg.constants.mass > 0.0)) fail("grid", "\"mass\" must be positive");
    }

    const json prop = root.value("propagation", json::object());
    reject_unknown(prop, "propagation",
                   {"method", "dt", "t_final", "snapshot_stride", "zeno_slices",
                    "line_box_halfwidth", "line_grid_points", "max_discarded"});
    {
        const std::string method = get_string(prop, "propagation", "method", "crank_nicolson");
        if (method == "crank_nicolson")
            cfg.prop.method = Method::CrankNicolson;
        else if (method == "zeno")
            cfg.prop.method = Method::Zeno;
        else
            fail("propagation", "unknown method \"" + method + "\"");
        cfg.prop.dt = get_number(prop, "propagation", "dt", 1e-4);
        cfg.prop.t_final = get_number(prop, "propagation", "t_final", 1.0);
        if (!(cfg.prop.dt > 0.0)) fail("propagation", "\"dt\" must be positive");
        if (!(cfg.prop.t_final >= 0.0)) fail("propagation", "\"t_final\" must be >= 0");
        double stride = get_number(prop, "propagation", "snapshot_stride", 10.0);
        if (stride < 1.0 || stride != std::floor(stride))
            fail("propagation", "\"snapshot_stride\" must be an integer >= 1");
        cfg.prop.snapshot_stride = static_cast<std::size_t>(stride);
        double slices = get_number(prop, "propagation", "zeno_slices", 64.0);
        if (slices < 1.0 || slices != std::floor(slices))
            fail("propagation", "\"zeno_slices\" must be an integer >= 1");
        cfg.prop.zeno_slices = static_cast<std::size_t>(slices);
        cfg.prop.line_box_halfwidth = get_number(prop, "propagation", "line_box_halfwidth", 4.0);
        if (!(cfg.prop.line_box_halfwidth > 0.0))
            fail("propagation", "\"line_box_halfwidth\" must be positive");
        double m = get_number(prop, "propagation", "line_grid_points", 4096.0);
        if (m < 16.0 || m != std::floor(m))
            fail("propagation", "\"line_grid_points\" must be an integer >= 16");
        cfg.prop.line_grid_points = static_cast<std::size_t>(m);
        cfg.prop.max_discarded = get_number(prop, "propagation", "max_discarded", 0.5);
        if (!(cfg.prop.max_discarded > 0.0 && cfg.prop.max_discarded <= 1.0))
            fail("propagation", "\"max_discarded\" must be in (0, 1]");
    }

    if (!root.contains("schedule")) fail("schedule", "missing section");
    cfg.schedule = parse_schedule(root.at("schedule"), base_dir, cfg.prop.t_final);

    const json init = root.value("initial_state", json::object({{"mode", 1}}));
    reject_unknown(init, "initial_state", {"mode", "superposition", "file"});
    {
        const int sources = int(init.contains("mode")) + int(init.contains("superposition")) +
                            int(init.contains("file"));
        if (sources != 1)
            fail("initial_state",
                 "exactly one initial-state source (mode, superposition, or file) must be given");
        if (init.contains("mode")) {
            cfg.init_kind = RunConfig::InitKind::Mode;
            double n = require_number(init, "initial_state", "mode");
            if (n != std::floor(n)) fail("initial_state", "\"mode\" must be an integer");
            cfg.mode = static_cast<int>(n);
        } else if (init.contains("superposition")) {
            cfg.init_kind = RunConfig::InitKind::Superposition;
            const auto& terms = init.at("superposition");
            if (!terms.is_array() || terms.empty())
                fail("initial_state", "\"superposition\" must be a non-empty array");
            for (const auto& term : terms) {
                if (!term.is_object()) fail("initial_state", "superposition entries are objects");
                reject_unknown(term, "initial_state.superposition", {"n", "re", "im"});
                double n = require_number(term, "initial_state.superposition", "n");
                if (n != std::floor(n))
                    fail("initial_state", "superposition \"n\" must be an integer");
                cplx c{get_number(term, "initial_state.superposition", "re", 0.0),
                       get_number(term, "initial_state.superposition", "im", 0.0)};
                cfg.superposition.emplace_back(static_cast<int>(n), c);
            }
        } else {
            cfg.init_kind = RunConfig::InitKind::File;
            cfg.state_file = base_dir / require_string(init, "initial_state", "file");
        }
    }

    if (root.contains("potential")) {
        cfg.potential = parse_potential(root.at("potential"), base_dir);
        if (cfg.prop.method == Method::Zeno)
            fail("potential",
                 "the zeno method propagates free flights and cannot apply a potential");
    }

    const json out = root.value("output", json::object());
    reject_unknown(out, "output", {"directory", "snapshots", "plotdata"});
    cfg.output.directory = get_string(out, "output", "directory", "run");
    if (cfg.output.directory.empty()) fail("output", "\"directory\" must not be empty");
    cfg.output.snapshots = get_bool(out, "output", "snapshots", false);
    cfg.output.plotdata = get_bool(out, "output", "plotdata", true);

    if (root.contains("sweep")) {
        const json& sw = root.at("sweep");
        reject_unknown(sw, "sweep", {"parameter", "values"});
        SweepSpec spec;
        spec.parameter = require_string(sw, "sweep", "parameter");
        if (!sw.contains("values") || !sw.at("values").is_array() || sw.at("values").empty())
            fail("sweep", "\"values\" must be a non-empty array");
        for (const auto& v : sw.at("values")) spec.values.push_back(v);
        // The dotted path must name a key reachable in this config, so typos
        // fail before any entry runs.
        const json* node = &root;
        std::string path = spec.parameter;
        for (std::size_t pos = 0; !path.empty();) {
            pos = path.find('.');
            std::string head = path.substr(0, pos);
            if (!node->is_object() || !node->contains(head))
                fail("sweep", "parameter path \"" + spec.parameter +
                                  "\" does not match any config key");
            node = &node->at(head);
            if (pos == std::string::npos) break;
            path = path.substr(pos + 1);
        }
        cfg.sweep = std::move(spec);
    }

    // Echo with every default materialized, in canonical section order.
    json resolved;
    {
        json sched = root.at("schedule");
        if (!sched.contains("l_min")) sched["l_min"] = cfg.schedule.l_min();
        resolved["schedule"] = sched;
        resolved["grid"] = {{"n", cfg.grid_n},
                            {"hbar", cfg.constants.hbar},
                            {"mass", cfg.constants.mass}};
        json p = {{"method", cfg.prop.method == Method::Zeno ? "zeno" : "crank_nicolson"},
                  {"dt", cfg.prop.dt},
                  {"t_final", cfg.prop.t_final},
                  {"snapshot_stride", cfg.prop.snapshot_stride}};
        if (cfg.prop.method == Method::Zeno) {
            p["zeno_slices"] = cfg.prop.zeno_slices;
            p["line_box_halfwidth"] = cfg.prop.line_box_halfwidth;
            p["line_grid_points"] = cfg.prop.line_grid_points;
            p["max_discarded"] = cfg.prop.max_discarded;
        }
        resolved["propagation"] = p;
        resolved["initial_state"] = init;
        if (root.contains("potential")) resolved["potential"] = root.at("potential");
        resolved["output"] = {{"directory", cfg.output.directory},
                              {"snapshots", cfg.output.snapshots},
                              {"plotdata", cfg.output.plotdata}};
        if (root.contains("sweep")) resolved["sweep"] = root.at("sweep");
    }
    cfg.resolved = std::move(resolved);
    return cfg;
}

}  // namespace

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config " + path.string());
    json root;
    try {
        root = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    return parse_json(std::move(root), base);
}

RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir) {
    json root;
    try {
        root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("config text: ") + e.what());
    }
    return parse_json(std::move(root), base_dir);
}

namespace {

WaveField read_state_file(const std::filesystem::path& path, const FixedGrid& grid) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file " + path.string());
    double time = 0.0;
    std::vector<double> xi, re, im;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            std::istringstream header(line.substr(1));
            std::string word, eq;
            if (header >> word >> eq && word == "t" && eq == "=") header >> time;
            continue;
        }
        std::istringstream row(line);
        double x, r, i;
        if (row >> x >> r >> i) {
            xi.push_back(x);
            re.push_back(r);
            im.push_back(i);
        }
    }
    if (xi.size() != grid.n_interior()) {
        throw GridMismatch("state file " + path.string() + " has " + std::to_string(xi.size()) +
                           " rows, grid expects " + std::to_string(grid.n_interior()));
    }
    WaveField field(grid, Frame::FixedBox, time);
    for (std::size_t j = 0; j < xi.size(); ++j) {
        if (std::abs(xi[j] - grid.node(j)) > 1e-9)
            throw GridMismatch("state file " + path.string() + " node " + std::to_string(j) +
                               " is off-grid");
        field.amps[j] = cplx{re[j], im[j]};
    }
    return field;
}

}  // namespace

WaveField build_initial_state(const RunConfig& cfg, const FixedGrid& grid) {
    switch (cfg.init_kind) {
        case RunConfig::InitKind::Mode:
            return eigenmode(grid, cfg.mode);
        case RunConfig::InitKind::Superposition: {
            WaveField field(grid, Frame::FixedBox);
            double coeff_norm2 = 0.0;
            for (const auto& [n, c] : cfg.superposition) {
                WaveField mode = eigenmode(grid, n);
                for (std::size_t j = 0; j < field.amps.size(); ++j)
                    field.amps[j] += c * mode.amps[j];
                coeff_norm2 += std::norm(c);
            }
            if (std::abs(coeff_norm2 - 1.0) > 1e-6)
                std::fprintf(stderr,
                             "warning: superposition coefficients have norm %.6g, normalizing\n",
                             std::sqrt(coeff_norm2));
            field.normalize();
            return field;
        }
        case RunConfig::InitKind::File: {
            WaveField field = read_state_file(cfg.state_file, grid);
            const double norm = field.norm();
            if (std::abs(norm - 1.0) > 1e-6)
                std::fprintf(stderr, "warning: state file norm is %.6g, normalizing\n", norm);
            field.normalize();
            return field;
        }
    }
    throw ValidationError("config: unreachable initial-state kind");
}

}
