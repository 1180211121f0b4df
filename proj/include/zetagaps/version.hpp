#pragma once

namespace zetagaps {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace zetagaps
