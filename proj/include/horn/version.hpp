#pragma once

namespace horn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace horn
