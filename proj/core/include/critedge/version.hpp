#pragma once

namespace critedge {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace critedge
