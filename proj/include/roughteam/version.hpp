#pragma once

namespace roughteam {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace roughteam
