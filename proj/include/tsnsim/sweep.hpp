#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tsnsim/config.hpp"
#include "tsnsim/metrics.hpp"

namespace tsnsim {

// One sweep point: resolved values of the sweepable knobs plus the point's
// position in the deterministic enumeration (pi-major, intensity-minor).
struct SweepPoint {
    int index = 0;
    std::int64_t pi = 1;
    std::int64_t st_intensity_bps = 1'000'000'000;
};

std::vector<SweepPoint> enumerate_points(const SweepConfig& cfg);

// Per-run seeds hash (seed, point, replication) so editing the sweep or
// adding replications never disturbs other runs' random streams.
std::uint64_t run_seed_for(const SweepConfig& cfg, int point_index,
                           int replication);

RunConfig make_run_config(const SweepConfig& cfg, const SweepPoint& point,
                          int replication);

// One CSV row: the scenario echo for this run plus one class's metrics.
struct MetricsRow {
    RunConfig run;                 // resolved scalars echoed into the row
    std::uint64_t base_seed = 1;   // the sweep's configured seed
    int replication = 0;
    TrafficClass klass = TrafficClass::ST;
    MetricsSummary m;
};

// Runs every (point, replication) pair, optionally on several worker
// threads. Row order is deterministic (point-major, then replication, then
// ST before BE) regardless of worker count. A failing run aborts the sweep
// with the offending point identified.
std::vector<MetricsRow> run_sweep(const SweepConfig& cfg, int workers = 1);

std::string csv_header();
std::string to_csv_line(const MetricsRow& row);
void emit_csv(const std::vector<MetricsRow>& rows, std::ostream& out);

}  // namespace tsnsim
