#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "tsnsim/cqf_port.hpp"
#include "tsnsim/network.hpp"

using namespace tsnsim;
using tsnsim::test::make_frame;
using tsnsim::test::Recorder;

TEST_CASE("the default ring wires six switches, six ports, twelve sources") {
    Simulation sim(RunConfig{});
    CHECK(sim.n_switches() == 6);
    CHECK(sim.n_ports() == 6);
    CHECK(sim.n_sources() == 12);
}

TEST_CASE("a two-switch ring is the smallest allowed") {
    RunConfig cfg;
    cfg.switches = 2;
    cfg.ttl = 1;
    Simulation sim(cfg);
    CHECK(sim.n_switches() == 2);
    CHECK(sim.n_sources() == 4);

    cfg.switches = 1;
    CHECK_THROWS_AS(Simulation{cfg}, std::invalid_argument);
}

TEST_CASE("ingest sinks a frame whose hop budget is spent") {
    Engine engine;
    StatsRegistry stats(0);
    Switch sw(engine, stats, 0);
    sw.ingest(make_frame(TrafficClass::ST, 64, 100, 0), 600);
    CHECK(sw.delivered() == 1);
    CHECK(stats.stats(TrafficClass::ST).delivered == 1);
    CHECK(stats.stats(TrafficClass::ST).min_delay == 500);
}

TEST_CASE("ingest forwards and decrements the hop budget") {
    Engine engine;
    StatsRegistry stats(0);
    Recorder dst(engine);
    Switch sw(engine, stats, 0);
    CqfPort port(engine, stats, LinkTarget{dst.id(), 500, 1'000'000'000},
                 CqfPort::Params{});
    sw.attach_egress(&port);
    sw.ingest(make_frame(TrafficClass::ST, 64, 0, 2), 0);
    CHECK(sw.delivered() == 0);
    REQUIRE(port.st_queue(0).size() == 1);
    CHECK(port.st_queue(0).front().remaining_hops == 1);
}

TEST_CASE("a frame that would sink before it was created is fatal") {
    Engine engine;
    StatsRegistry stats(0);
    Switch sw(engine, stats, 0);
    CHECK_THROWS_AS(sw.ingest(make_frame(TrafficClass::ST, 64, 1'000, 0), 500),
                    std::logic_error);
}

TEST_CASE("forwarding without an egress is fatal") {
    Engine engine;
    StatsRegistry stats(0);
    Switch sw(engine, stats, 0);
    CHECK_THROWS_AS(sw.ingest(make_frame(TrafficClass::ST, 64, 0, 2), 0),
                    std::logic_error);
}

TEST_CASE("one hop on a two-switch ring: cycle wait, serialization, wire") {
    RunConfig cfg;
    cfg.switches = 2;
    cfg.ttl = 1;
    cfg.pi = 1;
    cfg.warmup_ns = 0;
    cfg.sim_limit_ns = 300'000;

    std::vector<SimTime> st_delays;
    SimOptions opts;
    opts.delivery_observer = [&](const Frame& f, SimTime, SimTime delay) {
        if (f.klass == TrafficClass::ST) st_delays.push_back(delay);
    };
    Simulation sim(cfg, opts);
    sim.run();

    // Born at a cycle start, dequeued when the next window opens (one full
    // cycle), serialized in 512 ns, then 500 ns on the wire.
    REQUIRE(!st_delays.empty());
    for (SimTime d : st_delays) CHECK(d == 50'000 + 512 + 500);
}

TEST_CASE("three hops on the reference ring arrive in lockstep") {
    RunConfig cfg;
    cfg.pi = 1;
    cfg.warmup_ns = 0;
    cfg.sim_limit_ns = 400'000;

    std::vector<SimTime> st_delays;
    SimOptions opts;
    opts.delivery_observer = [&](const Frame& f, SimTime, SimTime delay) {
        if (f.klass == TrafficClass::ST) st_delays.push_back(delay);
    };
    Simulation sim(cfg, opts);
    auto report = sim.run();

    // Each hop adds one cycle of staging; the sinking stream occupies the
    // third slot of its final window (behind the two fresher streams), so
    // every frame of every stream sees exactly 3 * 50000 + 3 * 512 + 500.
    REQUIRE(!st_delays.empty());
    for (SimTime d : st_delays) CHECK(d == 152'036);
    CHECK(report.st.min_delay_ns.value() == 152'036);
    CHECK(report.st.max_delay_ns.value() == 152'036);
    CHECK(report.st.jitter_ns.value() == doctest::Approx(0.0));
}

TEST_CASE("a delivered frame was transmitted exactly ttl times") {
    RunConfig cfg;
    cfg.pi = 1;
    cfg.warmup_ns = 0;
    cfg.sim_limit_ns = 400'000;

    std::map<std::uint64_t, int> tx_count;
    std::set<std::uint64_t> delivered_st;
    SimOptions opts;
    opts.tx_observer = [&](const Frame& f, SimTime, SimTime) {
        if (f.klass == TrafficClass::ST) ++tx_count[f.id];
    };
    opts.delivery_observer = [&](const Frame& f, SimTime, SimTime) {
        if (f.klass == TrafficClass::ST) {
            CHECK(f.remaining_hops == 0);
            delivered_st.insert(f.id);
        }
    };
    Simulation sim(cfg, opts);
    sim.run();

    REQUIRE(!delivered_st.empty());
    for (std::uint64_t id : delivered_st) {
        CHECK(tx_count.at(id) == 3);
    }
}

TEST_CASE("a port never overlaps two transmissions") {
    RunConfig cfg;
    cfg.pi = 8;
    cfg.warmup_ns = 0;
    cfg.sim_limit_ns = 2 * kMilli;

    Simulation sim(cfg);
    std::vector<SimTime> last_end(static_cast<std::size_t>(sim.n_ports()), 0);
    int violations = 0;
    for (int i = 0; i < sim.n_ports(); ++i) {
        sim.port_at(i).set_tx_observer(
            [&last_end, &violations, i](const Frame& f, SimTime start,
                                        SimTime end) {
                auto& prev = last_end[static_cast<std::size_t>(i)];
                if (start < prev) ++violations;
                if (end - start != (f.klass == TrafficClass::ST ? 512 : 4'640))
                    ++violations;
                prev = end;
            });
    }
    sim.run();
    CHECK(violations == 0);
}

namespace {

void check_conservation(RunConfig cfg) {
    cfg.warmup_ns = 0;
    SimOptions opts;
    opts.source_duration_ns = 100 * kMilli;
    Simulation sim(cfg, opts);
    auto report = sim.run();
    CAPTURE(to_string(cfg.scheduler));
    // Sources stopped 50 ms before the horizon: everything sent was either
    // delivered or dropped by the end, for both classes.
    CHECK(report.st_raw.sent ==
          report.st_raw.delivered + report.st_raw.dropped());
    CHECK(report.be_raw.sent ==
          report.be_raw.delivered + report.be_raw.dropped());
    CHECK(report.st_raw.sent > 0);
    CHECK(report.be_raw.sent > 0);
}

}  // namespace

TEST_CASE("frame conservation holds under overload and purging") {
    RunConfig cfg;
    cfg.sim_limit_ns = 150 * kMilli;

    SUBCASE("cyclic scheduler past saturation") {
        cfg.scheduler = Scheduler::Cqf;
        cfg.pi = 17;
        check_conservation(cfg);
    }
    SUBCASE("rotating scheduler past its reservation") {
        cfg.scheduler = Scheduler::Paternoster;
        cfg.pi = 33;
        check_conservation(cfg);
    }
    SUBCASE("three-queue variant past saturation") {
        cfg.scheduler = Scheduler::Cqf3q;
        cfg.pi = 17;
        check_conservation(cfg);
    }
}

TEST_CASE("a conforming load is delivered in full once sources stop") {
    RunConfig cfg;
    cfg.pi = 8;
    cfg.warmup_ns = 0;
    cfg.sim_limit_ns = 200 * kMilli;
    SimOptions opts;
    opts.source_duration_ns = 150 * kMilli;
    Simulation sim(cfg, opts);
    auto report = sim.run();
    CHECK(report.st_raw.dropped() == 0);
    CHECK(report.st_raw.sent == report.st_raw.delivered);
}

TEST_CASE("a simulation cannot run twice") {
    Simulation sim(RunConfig{.sim_limit_ns = 100'000, .warmup_ns = 0});
    sim.run();
    CHECK_THROWS_AS(sim.run(), std::logic_error);
}
