#pragma once

namespace zpe {
inline constexpr const char* kVersion = "1.0.0";
}
