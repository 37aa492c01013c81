#pragma once

#include <cstdint>

#include "tsnsim/time.hpp"

namespace tsnsim {

// Inputs to the analytic CQF delay-bound and saturation calculators.
struct BoundInput {
    int hops = 3;
    SimTime cycle_time_ns = 50'000;
    SimTime st_window_ns = 25'000;
    std::int64_t link_rate_bps = 1'000'000'000;
    int streams_per_link = 3;
    std::int64_t frame_bits = 512;
    SimTime prop_delay_ns = 500;
};

struct DelayBounds {
    SimTime d_min_ns = 0;
    SimTime d_max_ns = 0;
    // False once propagation delay exceeds the ST window; the plain bounds
    // no longer apply there and cqf_nonconforming_max takes over.
    bool conforming = true;
};

// Classic per-path CQF bounds: (hops-1)*CT and (hops+1)*CT.
DelayBounds cqf_delay_bounds(const BoundInput& b);

// Worst-case delay cap when propagation delay approaches the cycle time:
// frames lose one full cycle per hop, observed to double the maximum at
// prop = CT. This is an empirical cap, not a derived law; between the ST
// window and CT the true maximum must be measured.
SimTime cqf_nonconforming_max(const BoundInput& b);

// Bits the ST window can carry per cycle at the link rate.
std::int64_t window_bits(const BoundInput& b);

// Largest frames-per-cycle burst for which all streams sharing a link fit
// into one ST window.
int saturation_pi(const BoundInput& b);

}  // namespace tsnsim
