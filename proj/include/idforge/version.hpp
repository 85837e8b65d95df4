#pragma once

namespace idforge {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace idforge
