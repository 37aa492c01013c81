#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsnsim/time.hpp"

namespace tsnsim {

enum class Scheduler : std::uint8_t { Cqf, Paternoster, Cqf3q };
enum class StKind : std::uint8_t { Periodic, Sporadic };

const char* to_string(Scheduler s);
const char* to_string(StKind k);

// All links run at 1 Gbps; this is a model constant, not a config key.
inline constexpr std::int64_t kLinkRateBps = 1'000'000'000;

// One fully resolved simulation run: every knob scalar, seed included.
struct RunConfig {
    Scheduler scheduler = Scheduler::Cqf;
    int switches = 6;
    int ttl = 3;
    SimTime cycle_time_ns = 50'000;
    SimTime st_window_ns = 25'000;
    SimTime prop_delay_ns = 500;
    StKind st_kind = StKind::Periodic;
    std::int64_t pi = 1;
    std::int64_t st_intensity_bps = 1'000'000'000;
    std::int64_t be_intensity_bps = 1'000'000'000;
    int st_frame_bytes = 64;
    int be_frame_bytes = 580;
    std::int64_t queue_bits = 524'288;
    double reservation_fraction = 1.0;
    SimTime sim_limit_ns = 1'000'000'000;
    SimTime warmup_ns = 10'000'000;
    SimTime st_phase_offset_ns = 0;
    std::uint64_t run_seed = 1;

    std::int64_t reservation_bits() const;
};

// A sweepable scenario: pi and st_intensity_bps may hold several values
// (from a {from,to,step} range in the config document); everything else is
// scalar. The defaults reproduce the reference parameter table, with the
// frames-per-cycle sweep 1..40 as the default experiment.
struct SweepConfig {
    Scheduler scheduler = Scheduler::Cqf;
    int switches = 6;
    int ttl = 3;
    SimTime cycle_time_ns = 50'000;
    SimTime st_window_ns = 25'000;
    SimTime prop_delay_ns = 500;
    StKind st_kind = StKind::Periodic;
    std::vector<std::int64_t> pi;                // default 1..40
    std::vector<std::int64_t> st_intensity_bps;  // default {1 Gbps}
    std::int64_t be_intensity_bps = 1'000'000'000;
    int st_frame_bytes = 64;
    int be_frame_bytes = 580;
    std::int64_t queue_bits = 524'288;
    double reservation_fraction = 1.0;
    SimTime sim_limit_ns = 1'000'000'000;
    SimTime warmup_ns = 10'000'000;
    SimTime st_phase_offset_ns = 0;
    std::uint64_t seed = 1;
    int replications = 1;

    SweepConfig();

    bool operator==(const SweepConfig&) const = default;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parses and validates a JSON config document. Unknown keys are rejected;
// out-of-range pi values only produce warnings. Throws ConfigError.
SweepConfig parse_config(const std::string& json_text,
                         std::vector<std::string>* warnings = nullptr);

SweepConfig load_config_file(const std::string& path,
                             std::vector<std::string>* warnings = nullptr);

// Default config as a JSON document; parse_config(dump_default_config())
// round-trips to SweepConfig{}.
std::string dump_default_config();

}  // namespace tsnsim
