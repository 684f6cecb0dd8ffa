#pragma once

namespace setpart {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace setpart
