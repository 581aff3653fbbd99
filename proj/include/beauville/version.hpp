#pragma once

namespace beauville {

inline constexpr const char* kToolName = "beauville";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace beauville
