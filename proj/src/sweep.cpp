#include "tsnsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "tsnsim/network.hpp"
#include "tsnsim/traffic.hpp"

namespace tsnsim {

std::vector<SweepPoint> enumerate_points(const SweepConfig& cfg) {
    std::vector<SweepPoint> points;
    points.reserve(cfg.pi.size() * cfg.st_intensity_bps.size());
    int index = 0;
    for (std::int64_t pi : cfg.pi) {
        for (std::int64_t intensity : cfg.st_intensity_bps) {
            points.push_back(SweepPoint{index++, pi, intensity});
        }
    }
    return points;
}

std::uint64_t run_seed_for(const SweepConfig& cfg, int point_index,
                           int replication) {
    return derive_seed(cfg.seed, static_cast<std::uint64_t>(point_index),
                       static_cast<std::uint64_t>(replication));
}

RunConfig make_run_config(const SweepConfig& cfg, const SweepPoint& point,
                          int replication) {
    RunConfig run;
    run.scheduler = cfg.scheduler;
    run.switches = cfg.switches;
    run.ttl = cfg.ttl;
    run.cycle_time_ns = cfg.cycle_time_ns;
    run.st_window_ns = cfg.st_window_ns;
    run.prop_delay_ns = cfg.prop_delay_ns;
    run.st_kind = cfg.st_kind;
    run.pi = point.pi;
    run.st_intensity_bps = point.st_intensity_bps;
    run.be_intensity_bps = cfg.be_intensity_bps;
    run.st_frame_bytes = cfg.st_frame_bytes;
    run.be_frame_bytes = cfg.be_frame_bytes;
    run.queue_bits = cfg.queue_bits;
    run.reservation_fraction = cfg.reservation_fraction;
    run.sim_limit_ns = cfg.sim_limit_ns;
    run.warmup_ns = cfg.warmup_ns;
    run.st_phase_offset_ns = cfg.st_phase_offset_ns;
    run.run_seed = run_seed_for(cfg, point.index, replication);
    return run;
}

std::vector<MetricsRow> run_sweep(const SweepConfig& cfg, int workers) {
    const std::vector<SweepPoint> points = enumerate_points(cfg);
    if (points.empty()) throw std::invalid_argument("sweep has no points");
    if (workers < 1) workers = 1;

    struct Job {
        SweepPoint point;
        int replication;
    };
    std::vector<Job> jobs;
    jobs.reserve(points.size() * static_cast<size_t>(cfg.replications));
    for (const SweepPoint& p : points) {
        for (int r = 0; r < cfg.replications; ++r) jobs.push_back({p, r});
    }

    std::vector<std::vector<MetricsRow>> results(jobs.size());
    std::vector<std::string> errors(jobs.size());
    std::atomic<size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job& job = jobs[i];
            try {
                const RunConfig run = make_run_config(cfg, job.point,
                                                      job.replication);
                RunReport report = Simulation(run).run();
                MetricsRow st{run, cfg.seed, job.replication,
                              TrafficClass::ST, report.st};
                MetricsRow be{run, cfg.seed, job.replication,
                              TrafficClass::BE, report.be};
                results[i] = {st, be};
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };

    const int n_threads =
        std::min<int>(workers, static_cast<int>(jobs.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (size_t i = 0; i < jobs.size(); ++i) {
        if (!errors[i].empty()) {
            throw std::runtime_error(
                "sweep point " + std::to_string(jobs[i].point.index) +
                " (pi=" + std::to_string(jobs[i].point.pi) +
                ", st_intensity_bps=" +
                std::to_string(jobs[i].point.st_intensity_bps) +
                ", replication=" + std::to_string(jobs[i].replication) +
                ") failed: " + errors[i]);
        }
    }

    std::vector<MetricsRow> rows;
    rows.reserve(jobs.size() * 2);
    for (auto& r : results) {
        for (auto& row : r) rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string format_ratio(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string format_llround(double v) {
    return std::to_string(std::llround(v));
}

}  // namespace

std::string csv_header() {
    // Scenario keys alphabetically, then the metrics columns.
    return "be_frame_bytes,be_intensity_bps,cycle_time_ns,pi,prop_delay_ns,"
           "queue_bits,replication,reservation_fraction,scheduler,seed,"
           "sim_limit_ns,st_frame_bytes,st_intensity_bps,st_kind,"
           "st_window_ns,switches,ttl,warmup_ns,"
           "klass,count,mean_delay_ns,min_delay_ns,max_delay_ns,jitter_ns,"
           "throughput_bps,loss_ratio,purge_drops,overflow_drops,"
           "carryover_count";
}

std::string to_csv_line(const MetricsRow& row) {
    const RunConfig& r = row.run;
    const MetricsSummary& m = row.m;
    std::string line;
    line.reserve(256);
    line += std::to_string(r.be_frame_bytes);
    line += ',';
    line += std::to_string(r.be_intensity_bps);
    line += ',';
    line += std::to_string(r.cycle_time_ns);
    line += ',';
    line += std::to_string(r.pi);
    line += ',';
    line += std::to_string(r.prop_delay_ns);
    line += ',';
    line += std::to_string(r.queue_bits);
    line += ',';
    line += std::to_string(row.replication);
    line += ',';
    line += format_ratio(r.reservation_fraction);
    line += ',';
    line += to_string(r.scheduler);
    line += ',';
    line += std::to_string(row.base_seed);
    line += ',';
    line += std::to_string(r.sim_limit_ns);
    line += ',';
    line += std::to_string(r.st_frame_bytes);
    line += ',';
    line += std::to_string(r.st_intensity_bps);
    line += ',';
    line += to_string(r.st_kind);
    line += ',';
    line += std::to_string(r.st_window_ns);
    line += ',';
    line += std::to_string(r.switches);
    line += ',';
    line += std::to_string(r.ttl);
    line += ',';
    line += std::to_string(r.warmup_ns);
    line += ',';
    line += to_string(row.klass);
    line += ',';
    line += std::to_string(m.count);
    line += ',';
    if (m.mean_delay_ns) line += format_llround(*m.mean_delay_ns);
    line += ',';
    if (m.min_delay_ns) line += std::to_string(*m.min_delay_ns);
    line += ',';
    if (m.max_delay_ns) line += std::to_string(*m.max_delay_ns);
    line += ',';
    if (m.jitter_ns) line += format_llround(*m.jitter_ns);
    line += ',';
    line += format_llround(m.throughput_bps);
    line += ',';
    if (m.loss_ratio) line += format_ratio(*m.loss_ratio);
    line += ',';
    line += std::to_string(m.purge_drops);
    line += ',';
    line += std::to_string(m.overflow_drops);
    line += ',';
    line += std::to_string(m.carryover);
    return line;
}

void emit_csv(const std::vector<MetricsRow>& rows, std::ostream& out) {
    out << csv_header() << '\n';
    for (const MetricsRow& row : rows) out << to_csv_line(row) << '\n';
}

}  // namespace tsnsim
