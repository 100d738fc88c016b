#pragma once

namespace agrisim {
inline constexpr const char* kToolName = "agrisim";
inline constexpr const char* kToolVersion = "0.1.0";
} // namespace agrisim
