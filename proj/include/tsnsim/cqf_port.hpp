#pragma once

#include "tsnsim/egress_port.hpp"

namespace tsnsim {

// Cyclic queuing and forwarding egress port. Two ST queues alternate
// enqueue/dequeue roles each cycle; a time-aware shaper opens the ST gate
// for the first st_window_ns of every cycle and the BE gate for the rest.
// A transmission may start only if it completes before its gate closes.
class CqfPort final : public EgressPort {
public:
    struct Params {
        SimTime cycle_time_ns = 50'000;
        SimTime st_window_ns = 25'000;
        std::int64_t queue_bits = 524'288;
    };

    CqfPort(Engine& engine, StatsRegistry& stats, LinkTarget link, Params p)
        : EgressPort(engine, stats, link),
          params_(p),
          st_q_{BoundedQueue(p.queue_bits), BoundedQueue(p.queue_bits)},
          be_q_(p.queue_bits) {}

    void start() override {
        engine_.schedule(params_.st_window_ns, EventKind::GateChange, id_);
        engine_.schedule(params_.cycle_time_ns, EventKind::CycleRollover, id_);
    }

    std::int64_t cycle_index() const { return cycle_index_; }
    int enq_index() const { return static_cast<int>(cycle_index_ % 2); }
    int deq_index() const { return static_cast<int>((cycle_index_ + 1) % 2); }

    bool st_gate_open(SimTime now) const {
        return now % params_.cycle_time_ns < params_.st_window_ns;
    }

    const BoundedQueue& st_queue(int i) const { return st_q_[i]; }
    const BoundedQueue& be_queue() const { return be_q_; }
    const Params& params() const { return params_; }

protected:
    void enqueue(Frame f, SimTime now) override;
    std::optional<Frame> select(SimTime now) override;
    void on_timer(const Event& ev) override;

private:
    SimTime cycle_start() const { return cycle_index_ * params_.cycle_time_ns; }

    Params params_;
    BoundedQueue st_q_[2];
    BoundedQueue be_q_;
    std::int64_t cycle_index_ = 0;
};

}  // namespace tsnsim
