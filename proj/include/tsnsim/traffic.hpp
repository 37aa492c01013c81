#pragma once

#include <cstdint>
#include <random>

#include "tsnsim/engine.hpp"
#include "tsnsim/frame.hpp"
#include "tsnsim/metrics.hpp"

namespace tsnsim {

class Switch;

// Keyed seed derivation so substreams (per sweep point, per source, per
// switch phase) are independent and stable under config edits.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

// Seed-domain tags for derive_seed's first key.
inline constexpr std::uint64_t kSeedDomainSource = 0x736f7572u;  // sources
inline constexpr std::uint64_t kSeedDomainPhase = 0x70686173u;   // epoch phases

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Exponential interarrival draw, rounded to whole nanoseconds.
    // Hand-rolled inverse CDF so the sequence is identical on every
    // platform (the standard library distribution is unspecified).
    SimTime next_exp_ns(double mean_ns);

    // Uniform integer in [0, bound).
    SimTime next_below(SimTime bound);

private:
    std::mt19937_64 gen_;
};

struct SourceSpec {
    std::int32_t stream_id = 0;
    TrafficClass klass = TrafficClass::ST;
    bool periodic = true;
    std::int64_t pi = 1;              // frames per burst (periodic)
    std::int64_t intensity_bps = 0;   // offered load (sporadic)
    std::int32_t frame_bytes = 64;
    std::int32_t ttl = 3;
    SimTime phase_ns = 0;             // first emission offset
    SimTime duration_ns = 0;          // emission horizon
    SimTime cycle_time_ns = 50'000;   // periodic burst period
    std::uint64_t seed = 1;
};

// A traffic generator attached to one gateway switch. Periodic sources
// inject a burst of pi frames at the start of every cycle; sporadic sources
// inject single frames with exponential interarrival times (a Poisson
// process at the configured intensity).
class TrafficSource final : public EventHandler {
public:
    TrafficSource(Engine& engine, StatsRegistry& stats, Switch& gateway,
                  SourceSpec spec);

    void start();
    void on_event(const Event& ev) override;

    EntityId id() const { return id_; }
    const SourceSpec& spec() const { return spec_; }
    std::int64_t emitted() const { return emitted_; }

    SimTime mean_interarrival_ns() const;

private:
    void emit_one(SimTime now);

    Engine& engine_;
    StatsRegistry& stats_;
    Switch& gateway_;
    SourceSpec spec_;
    Rng rng_;
    std::int64_t emitted_ = 0;
    EntityId id_ = 0;
};

}  // namespace tsnsim
