#pragma once

namespace decwit {

inline constexpr const char* kToolName = "decwit";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace decwit
