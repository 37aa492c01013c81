#include "tsnsim/bounds.hpp"

namespace tsnsim {

DelayBounds cqf_delay_bounds(const BoundInput& b) {
    DelayBounds out;
    out.d_min_ns = static_cast<SimTime>(b.hops - 1) * b.cycle_time_ns;
    out.d_max_ns = static_cast<SimTime>(b.hops + 1) * b.cycle_time_ns;
    out.conforming = b.prop_delay_ns <= b.st_window_ns;
    return out;
}

SimTime cqf_nonconforming_max(const BoundInput& b) {
    const DelayBounds plain = cqf_delay_bounds(b);
    if (plain.conforming) return plain.d_max_ns;
    return 2 * plain.d_max_ns;
}

std::int64_t window_bits(const BoundInput& b) {
    return b.st_window_ns * b.link_rate_bps / kSecond;
}

int saturation_pi(const BoundInput& b) {
    const std::int64_t per_pi = b.streams_per_link * b.frame_bits;
    return static_cast<int>(window_bits(b) / per_pi);
}

}  // namespace tsnsim
