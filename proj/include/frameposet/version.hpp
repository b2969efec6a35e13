#pragma once

namespace frameposet {
inline constexpr const char* kVersion = "0.1.0";
}
