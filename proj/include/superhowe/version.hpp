#pragma once

namespace howe {
inline constexpr const char* kVersion = "0.1.0";
}
