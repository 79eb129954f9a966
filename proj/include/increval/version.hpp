#pragma once

namespace increval {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace increval
