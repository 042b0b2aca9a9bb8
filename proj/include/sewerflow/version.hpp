#pragma once

namespace sewerflow {

inline constexpr const char* kToolName = "sewerflow";
inline constexpr const char* kToolVersion = "0.1.0";

// Version tag carried by every model / report / manifest JSON document.
inline constexpr int kFormatVersion = 1;

}  // namespace sewerflow
