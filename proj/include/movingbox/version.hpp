#pragma once

namespace movingbox {

inline constexpr const char* kVersion = "0.1.0";

}
