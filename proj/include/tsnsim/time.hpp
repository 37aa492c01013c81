#pragma once

#include <cstdint>

namespace tsnsim {

// All simulation timestamps and durations are integer nanoseconds. Scenario
// quantities (cycle times, windows, propagation delays, run limits) are exact
// in ns, and frame wire times at 1 Gbps are whole ns for whole-byte frames,
// so the clock never accumulates rounding error.
using SimTime = std::int64_t;

inline constexpr SimTime kMicro = 1'000;
inline constexpr SimTime kMilli = 1'000'000;
inline constexpr SimTime kSecond = 1'000'000'000;

// Wire time of a frame on a link. 64 B at 1 Gbps -> 512 ns, 580 B -> 4640 ns.
// Preamble and inter-frame gap are deliberately excluded; window packing
// arithmetic (and the saturation knees derived from it) assumes payload-only
// wire time.
constexpr SimTime tx_time_ns(std::int64_t size_bytes, std::int64_t rate_bps) {
    return size_bytes * 8 * kSecond / rate_bps;
}

}  // namespace tsnsim
