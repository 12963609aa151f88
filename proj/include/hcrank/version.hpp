#pragma once

namespace hcrank {
inline constexpr const char* kVersion = "0.1.0";
}
