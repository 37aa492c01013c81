#pragma once

#include <cstdint>
#include <optional>

#include "tsnsim/time.hpp"

namespace tsnsim {

enum class TrafficClass : std::uint8_t { ST, BE };

constexpr const char* to_string(TrafficClass c) {
    return c == TrafficClass::ST ? "ST" : "BE";
}

struct Frame {
    std::uint64_t id = 0;
    std::int32_t stream_id = -1;
    TrafficClass klass = TrafficClass::BE;
    std::int32_t size_bytes = 0;
    SimTime created_at = 0;
    std::int32_t src_switch = -1;
    // Hops left to travel. Decremented on switch ingest; a frame arriving with
    // zero remaining hops is handed to that switch's sink.
    std::int32_t remaining_hops = 0;
    // Cycle tag used by the three-queue CQF variant: set by the gateway at
    // injection, refreshed by every port at transmission start. Unused (and
    // unset) under the other schedulers.
    std::optional<std::int64_t> sender_cycle;

    std::int64_t bits() const { return std::int64_t{size_bytes} * 8; }
};

}  // namespace tsnsim
