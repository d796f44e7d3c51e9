#pragma once

#include <string_view>
#include <vector>

namespace movingbox {

/// A named, ready-to-run config shipped with the CLI. `text` is the full
/// annotated JSON, suitable for `presets show` and for parsing directly.
struct Preset {
    const char* name;
    const char* summary;
    const char* text;
};

const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

}
