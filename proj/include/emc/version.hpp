#pragma once

namespace emc {
inline constexpr const char* kVersion = "1.0.0";
}
