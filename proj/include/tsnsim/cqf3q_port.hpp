#pragma once

#include "tsnsim/egress_port.hpp"

namespace tsnsim {

// Experimental three-queue CQF variant. Alongside the alternating
// enqueue/dequeue pair it keeps a waiting queue for frames that arrive in a
// different cycle than the one the upstream port transmitted them in (which
// happens once propagation delay approaches the cycle time). Within the ST
// window the dequeue queue has strict priority; the waiting queue is served
// only while the dequeue queue is empty. Frames are cycle-stamped when
// their transmission starts; unstamped frames (fresh from a local source)
// are stamped with the port's current cycle at admission.
//
// The waiting-queue service discipline here is one plausible reading of an
// idea whose details are open; treat results from this scheduler as
// exploratory rather than reference behavior.
class Cqf3qPort final : public EgressPort {
public:
    struct Params {
        SimTime cycle_time_ns = 50'000;
        SimTime st_window_ns = 25'000;
        std::int64_t queue_bits = 524'288;
    };

    Cqf3qPort(Engine& engine, StatsRegistry& stats, LinkTarget link, Params p)
        : EgressPort(engine, stats, link),
          params_(p),
          ab_{BoundedQueue(p.queue_bits), BoundedQueue(p.queue_bits)},
          waiting_(p.queue_bits),
          be_q_(p.queue_bits) {}

    void start() override {
        engine_.schedule(params_.st_window_ns, EventKind::GateChange, id_);
        engine_.schedule(params_.cycle_time_ns, EventKind::CycleRollover, id_);
    }

    std::int64_t cycle_index() const { return cycle_index_; }
    int enq_index() const { return static_cast<int>(cycle_index_ % 2); }
    int deq_index() const { return static_cast<int>((cycle_index_ + 1) % 2); }

    const BoundedQueue& pair_queue(int i) const { return ab_[i]; }
    const BoundedQueue& waiting() const { return waiting_; }
    const BoundedQueue& be_queue() const { return be_q_; }

protected:
    void enqueue(Frame f, SimTime now) override;
    std::optional<Frame> select(SimTime now) override;
    void stamp_for_tx(Frame& f, SimTime now) override;
    void on_timer(const Event& ev) override;

private:
    SimTime cycle_start() const { return cycle_index_ * params_.cycle_time_ns; }

    Params params_;
    BoundedQueue ab_[2];
    BoundedQueue waiting_;
    BoundedQueue be_q_;
    std::int64_t cycle_index_ = 0;
};

}  // namespace tsnsim
