#pragma once

namespace qsearch {

inline constexpr const char* kToolName = "qsearch";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace qsearch
