#include "tsnsim/metrics.hpp"

#include <cmath>

namespace tsnsim {

void ClassStats::add_delivery(SimTime delay_ns, std::int64_t bits) {
    if (delivered == 0) {
        min_delay = delay_ns;
        max_delay = delay_ns;
    } else {
        if (delay_ns < min_delay) min_delay = delay_ns;
        if (delay_ns > max_delay) max_delay = delay_ns;
    }
    ++delivered;
    bits_delivered += bits;
    const double d = static_cast<double>(delay_ns);
    const double delta = d - mean_delay;
    mean_delay += delta / static_cast<double>(delivered);
    m2_delay += delta * (d - mean_delay);
}

void ClassStats::add_drop(DropSite site) {
    switch (site) {
        case DropSite::QueueOverflow: ++overflow_drops; break;
        case DropSite::EpochPurge: ++purge_drops; break;
    }
}

MetricsSummary finalize(const ClassStats& stats, SimTime measured_interval_ns) {
    MetricsSummary out;
    out.count = stats.delivered;
    out.purge_drops = stats.purge_drops;
    out.overflow_drops = stats.overflow_drops;
    out.carryover = stats.carryover;
    if (stats.delivered > 0) {
        out.mean_delay_ns = stats.mean_delay;
        out.min_delay_ns = stats.min_delay;
        out.max_delay_ns = stats.max_delay;
        out.jitter_ns = std::sqrt(stats.m2_delay /
                                  static_cast<double>(stats.delivered));
    }
    if (measured_interval_ns > 0) {
        out.throughput_bps = static_cast<double>(stats.bits_delivered) *
                             static_cast<double>(kSecond) /
                             static_cast<double>(measured_interval_ns);
    }
    if (stats.sent > 0) {
        out.loss_ratio = static_cast<double>(stats.dropped()) /
                         static_cast<double>(stats.sent);
    }
    return out;
}

}  // namespace tsnsim
