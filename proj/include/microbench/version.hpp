#pragma once

namespace microbench {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace microbench
