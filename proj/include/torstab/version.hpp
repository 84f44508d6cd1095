#pragma once

namespace torstab {
inline constexpr const char* kVersion = "0.1.0";
}
