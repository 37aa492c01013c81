#pragma once

#include <functional>
#include <optional>

#include "tsnsim/bounded_queue.hpp"
#include "tsnsim/engine.hpp"
#include "tsnsim/frame.hpp"
#include "tsnsim/metrics.hpp"

namespace tsnsim {

// Where a port's transmissions land: the ingest entity of the downstream
// switch, reached tx_time + prop_delay after transmission start.
struct LinkTarget {
    EntityId dst = 0;
    SimTime prop_delay_ns = 0;
    std::int64_t rate_bps = 1'000'000'000;
};

using TxObserver =
    std::function<void(const Frame&, SimTime tx_start, SimTime tx_end)>;

// Base egress port: owns the idle/busy transmitter state machine and the
// TxComplete / FrameArrival plumbing. Subclasses own the queues and decide
// admission (enqueue) and service order (select). A transmission, once
// started, always runs to completion (non-preemptive service).
class EgressPort : public EventHandler {
public:
    EgressPort(Engine& engine, StatsRegistry& stats, LinkTarget link)
        : engine_(engine), stats_(stats), link_(link) {
        id_ = engine_.register_handler(this);
    }
    ~EgressPort() override = default;

    EntityId id() const { return id_; }

    // Entry point for frames routed out this port.
    void accept(Frame f, SimTime now) {
        enqueue(std::move(f), now);
        try_transmit(now);
    }

    // Schedules the port's initial timer events; called once before run.
    virtual void start() = 0;

    void on_event(const Event& ev) override;

    void set_tx_observer(TxObserver obs) { tx_observer_ = std::move(obs); }

    SimTime tx_time(const Frame& f) const {
        return tx_time_ns(f.size_bytes, link_.rate_bps);
    }

    bool busy() const { return busy_; }

protected:
    // Admission: place the frame in a queue or drop it (recording the loss).
    virtual void enqueue(Frame f, SimTime now) = 0;
    // Service: pop and return the next frame allowed to start at `now`.
    virtual std::optional<Frame> select(SimTime now) = 0;
    // Hook to edit a frame as its transmission starts.
    virtual void stamp_for_tx(Frame& f, SimTime now) {
        (void)f;
        (void)now;
    }
    // Gate changes and cycle/epoch rollovers land here.
    virtual void on_timer(const Event& ev) = 0;

    void try_transmit(SimTime now);

    void drop(const Frame& f, DropSite site) {
        stats_.record_drop(f.klass, site);
    }

    Engine& engine_;
    StatsRegistry& stats_;
    LinkTarget link_;
    EntityId id_ = 0;
    bool busy_ = false;
    TxObserver tx_observer_;
};

}  // namespace tsnsim
