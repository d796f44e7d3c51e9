#include "movingbox/presets.hpp"

namespace movingbox {

namespace {

constexpr const char* kGalilean = R"json({
  // Box of unit width translating at constant velocity. In the co-moving
  // frame the dynamics reduce to a static box seen through a momentum
  // boost, so the energy should stay flat up to discretization error.
  "schedule": { "kind": "linear_translation", "l0": 1.0, "d0": 0.0, "v": 0.5 },
  "grid": { "n": 512 },
  "propagation": { "method": "crank_nicolson", "dt": 1e-4, "t_final": 1.0, "snapshot_stride": 100 },
  "initial_state": { "mode": 1 },
  "output": { "directory": "runs/galilean", "snapshots": true }
})json";

constexpr const char* kElevator = R"json({
  // Uniformly accelerating box. Equivalent, up to a time-dependent phase,
  // to a static box with a linear potential of slope -m*g: the bounded-box
  // statement of the equivalence principle.
  "schedule": { "kind": "uniform_acceleration", "l0": 1.0, "d0": 0.0, "g": 1.0 },
  "grid": { "n": 512 },
  "propagation": { "method": "crank_nicolson", "dt": 1e-4, "t_final": 1.0, "snapshot_stride": 100 },
  "initial_state": { "mode": 1 },
  "output": { "directory": "runs/elevator", "snapshots": true }
})json";

constexpr const char* kLinearExpansion = R"json({
  // Slowly expanding box starting from the ground state. The energy decays
  // like 1/l(t)^2 and the boundary-flux rate stays negative throughout.
  "schedule": { "kind": "linear_expansion", "l0": 1.0, "v": 0.05 },
  "grid": { "n": 512 },
  "propagation": { "method": "crank_nicolson", "dt": 1e-4, "t_final": 1.0, "snapshot_stride": 10 },
  "initial_state": { "mode": 1 },
  "output": { "directory": "runs/linear-expansion", "snapshots": true }
})json";

constexpr const char* kSinusoidal = R"json({
  // Breathing box: width oscillates between 1 and 3. Energy is pumped in
  // and out each cycle; the sign of the boundary rate tracks -sign(ldot).
  "schedule": { "kind": "sinusoidal_expansion", "l0": 2.0, "amplitude": 1.0, "omega": 1.0 },
  "grid": { "n": 512 },
  "propagation": { "method": "crank_nicolson", "dt": 1e-4, "t_final": 2.0, "snapshot_stride": 100 },
  "initial_state": { "mode": 1 },
  "output": { "directory": "runs/sinusoidal", "snapshots": true }
})json";

constexpr const char* kFermiUlam = R"json({
  // One-sided expansion: the left wall stays at the origin while the right
  // wall recedes at constant speed, the receding-piston half of the
  // Fermi-Ulam setup.
  "schedule": { "kind": "linear_expansion", "l0": 1.0, "v": 0.1, "pin_left_wall": true },
  "grid": { "n": 512 },
  "propagation": { "method": "crank_nicolson", "dt": 1e-4, "t_final": 1.0, "snapshot_stride": 10 },
  "initial_state": { "mode": 1 },
  "output": { "directory": "runs/fermi-ulam", "snapshots": true }
})json";

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> list = {
        {"galilean", "unit box translating at v = 0.5", kGalilean},
        {"elevator", "uniformly accelerating box, g = 1", kElevator},
        {"linear-expansion", "box expanding at v = 0.05 from the ground state", kLinearExpansion},
        {"sinusoidal", "breathing box, width 2 + sin(t)", kSinusoidal},
        {"fermi-ulam", "left wall pinned, right wall receding at v = 0.1", kFermiUlam},
    };
    return list;
}

const Preset* find_preset(std::string_view name) {
    for (const auto& p : presets())
        if (name == p.name) return &p;
    return nullptr;
}

}
