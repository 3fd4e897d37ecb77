#pragma once

namespace creg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace creg
