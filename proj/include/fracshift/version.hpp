#pragma once

namespace fracshift {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fracshift
