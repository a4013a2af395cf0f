#pragma once

#include <cstdint>

namespace microbench::memhook {

// Implemented by exactly one of the two object libraries: the tracking hook
// (replaces global operator new/delete and counts live bytes) or the stub
// (reports unavailable). Final binaries pick one at link time.

bool available();
void window_begin();
std::uint64_t window_peak_bytes();

}  // namespace microbench::memhook
