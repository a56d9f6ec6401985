#pragma once

namespace adherence {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace adherence
