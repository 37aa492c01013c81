#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tsnsim/frame.hpp"
#include "tsnsim/time.hpp"

namespace tsnsim {

enum class DropSite : std::uint8_t {
    QueueOverflow,  // frame did not fit into a bounded queue
    EpochPurge,     // frame discarded when a stale queue was flushed
};

// Running per-class aggregate. Delay moments use Welford's online update
// so mean and variance stay numerically stable over millions of samples.
struct ClassStats {
    std::int64_t delivered = 0;
    std::int64_t bits_delivered = 0;
    SimTime min_delay = 0;
    SimTime max_delay = 0;
    double mean_delay = 0.0;
    double m2_delay = 0.0;  // sum of squared deviations from the mean

    std::int64_t sent = 0;  // full-run count, not warmup-gated
    std::int64_t overflow_drops = 0;
    std::int64_t purge_drops = 0;
    std::int64_t carryover = 0;

    void add_delivery(SimTime delay_ns, std::int64_t bits);
    void add_drop(DropSite site);

    std::int64_t dropped() const { return overflow_drops + purge_drops; }

    bool operator==(const ClassStats&) const = default;
};

// Finalized view of one class over one measurement interval.
struct MetricsSummary {
    std::int64_t count = 0;
    std::optional<double> mean_delay_ns;
    std::optional<SimTime> min_delay_ns;
    std::optional<SimTime> max_delay_ns;
    std::optional<double> jitter_ns;  // population standard deviation
    double throughput_bps = 0.0;
    std::optional<double> loss_ratio;  // dropped / sent, full run
    std::int64_t purge_drops = 0;
    std::int64_t overflow_drops = 0;
    std::int64_t carryover = 0;
};

MetricsSummary finalize(const ClassStats& stats, SimTime measured_interval_ns);

// Collects deliveries and drops for a whole run. Deliveries inside the
// warmup window are discarded; sent counts and drops always accumulate so
// the loss ratio reflects the full run.
class StatsRegistry {
public:
    explicit StatsRegistry(SimTime warmup_ns) : warmup_ns_(warmup_ns) {}

    void record_sent(TrafficClass klass) { stats_[klass].sent++; }

    void record_delivery(TrafficClass klass, SimTime now, SimTime delay_ns,
                         std::int64_t bits) {
        if (now < warmup_ns_) return;
        stats_[klass].add_delivery(delay_ns, bits);
    }

    void record_drop(TrafficClass klass, DropSite site) {
        stats_[klass].add_drop(site);
    }

    void record_carryover(TrafficClass klass, std::int64_t frames) {
        stats_[klass].carryover += frames;
    }

    const ClassStats& stats(TrafficClass klass) const {
        return stats_.at(klass);
    }

    SimTime warmup_ns() const { return warmup_ns_; }

private:
    SimTime warmup_ns_;
    std::map<TrafficClass, ClassStats> stats_{
        {TrafficClass::ST, {}}, {TrafficClass::BE, {}}};
};

}  // namespace tsnsim
