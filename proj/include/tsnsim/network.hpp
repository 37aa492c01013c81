#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "tsnsim/config.hpp"
#include "tsnsim/egress_port.hpp"
#include "tsnsim/engine.hpp"
#include "tsnsim/metrics.hpp"
#include "tsnsim/traffic.hpp"

namespace tsnsim {

using DeliveryObserver =
    std::function<void(const Frame&, SimTime now, SimTime delay_ns)>;

// One ring switch: receives frames (from its upstream link or from local
// sources), sinks those whose hop budget is spent, and forwards the rest
// through its single egress port toward the next switch.
class Switch final : public EventHandler {
public:
    Switch(Engine& engine, StatsRegistry& stats, int index)
        : engine_(engine), stats_(stats), index_(index) {
        id_ = engine_.register_handler(this);
    }

    void attach_egress(EgressPort* port) { egress_ = port; }

    void ingest(Frame f, SimTime now);

    void on_event(const Event& ev) override;

    EntityId id() const { return id_; }
    int index() const { return index_; }
    std::int64_t delivered() const { return delivered_; }

    void set_delivery_observer(DeliveryObserver obs) {
        delivery_observer_ = std::move(obs);
    }

private:
    Engine& engine_;
    StatsRegistry& stats_;
    int index_;
    EntityId id_ = 0;
    EgressPort* egress_ = nullptr;
    std::int64_t delivered_ = 0;
    DeliveryObserver delivery_observer_;
};

struct SimOptions {
    // Stop sources early (drain check); default is the full sim limit.
    std::optional<SimTime> source_duration_ns;
    TxObserver tx_observer;              // installed on every egress port
    DeliveryObserver delivery_observer;  // installed on every switch
};

struct RunReport {
    MetricsSummary st;
    MetricsSummary be;
    ClassStats st_raw;
    ClassStats be_raw;
};

// A complete single run: the unidirectional ring of switches with one
// scheduler-equipped egress port per switch, one ST and one BE source per
// switch, and the stats registry. Building it wires the whole topology;
// run() executes to the configured horizon and snapshots the metrics.
class Simulation {
public:
    explicit Simulation(const RunConfig& cfg, SimOptions opts = {});
    ~Simulation();

    RunReport run();

    Engine& engine() { return engine_; }
    StatsRegistry& stats() { return stats_; }
    int n_switches() const { return static_cast<int>(switches_.size()); }
    int n_ports() const { return static_cast<int>(ports_.size()); }
    int n_sources() const { return static_cast<int>(sources_.size()); }
    Switch& switch_at(int i) { return *switches_.at(static_cast<size_t>(i)); }
    EgressPort& port_at(int i) { return *ports_.at(static_cast<size_t>(i)); }
    TrafficSource& source_at(int i) {
        return *sources_.at(static_cast<size_t>(i));
    }

private:
    RunConfig cfg_;
    Engine engine_;
    StatsRegistry stats_;
    std::vector<std::unique_ptr<Switch>> switches_;
    std::vector<std::unique_ptr<EgressPort>> ports_;
    std::vector<std::unique_ptr<TrafficSource>> sources_;
    bool ran_ = false;
};

}  // namespace tsnsim
