#include "tsnsim/traffic.hpp"

#include <cmath>

#include "tsnsim/network.hpp"

namespace tsnsim {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                          std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

SimTime Rng::next_exp_ns(double mean_ns) {
    const double u = next_unit();
    return std::llround(-mean_ns * std::log1p(-u));
}

SimTime Rng::next_below(SimTime bound) {
    const auto v = static_cast<SimTime>(next_unit() * static_cast<double>(bound));
    return v < bound ? v : bound - 1;
}

TrafficSource::TrafficSource(Engine& engine, StatsRegistry& stats,
                             Switch& gateway, SourceSpec spec)
    : engine_(engine),
      stats_(stats),
      gateway_(gateway),
      spec_(spec),
      rng_(spec.seed) {
    id_ = engine_.register_handler(this);
}

SimTime TrafficSource::mean_interarrival_ns() const {
    const double frame_bits = static_cast<double>(spec_.frame_bytes) * 8.0;
    return static_cast<SimTime>(
        std::llround(frame_bits * static_cast<double>(kSecond) /
                     static_cast<double>(spec_.intensity_bps)));
}

void TrafficSource::start() {
    const SimTime end = spec_.phase_ns + spec_.duration_ns;
    SimTime first = spec_.phase_ns;
    if (!spec_.periodic) {
        first += rng_.next_exp_ns(static_cast<double>(mean_interarrival_ns()));
    }
    if (first < end) {
        engine_.schedule(first, EventKind::SourceEmit, id_);
    }
}

void TrafficSource::on_event(const Event& ev) {
    const SimTime now = ev.time;
    const SimTime end = spec_.phase_ns + spec_.duration_ns;
    if (spec_.periodic) {
        for (std::int64_t i = 0; i < spec_.pi; ++i) emit_one(now);
        const SimTime next = now + spec_.cycle_time_ns;
        if (next < end) engine_.schedule(next, EventKind::SourceEmit, id_);
    } else {
        emit_one(now);
        const SimTime next =
            now + rng_.next_exp_ns(static_cast<double>(mean_interarrival_ns()));
        if (next < end) engine_.schedule(next, EventKind::SourceEmit, id_);
    }
}

void TrafficSource::emit_one(SimTime now) {
    Frame f;
    f.id = (static_cast<std::uint64_t>(
                static_cast<std::uint32_t>(spec_.stream_id))
            << 32) |
           static_cast<std::uint64_t>(emitted_ & 0xffffffff);
    f.stream_id = spec_.stream_id;
    f.klass = spec_.klass;
    f.size_bytes = spec_.frame_bytes;
    f.created_at = now;
    f.src_switch = gateway_.index();
    f.remaining_hops = spec_.ttl;
    ++emitted_;
    stats_.record_sent(spec_.klass);
    gateway_.ingest(std::move(f), now);
}

}  // namespace tsnsim
