#pragma once

namespace aztec {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kToolName = "aztec";

}  // namespace aztec
