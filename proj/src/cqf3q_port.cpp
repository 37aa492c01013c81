#include "tsnsim/cqf3q_port.hpp"

namespace tsnsim {

void Cqf3qPort::enqueue(Frame f, SimTime now) {
    (void)now;
    if (f.klass == TrafficClass::BE) {
        if (!be_q_.fits(f)) {
            drop(f, DropSite::QueueOverflow);
            return;
        }
        be_q_.try_push(std::move(f));
        return;
    }
    if (!f.sender_cycle) f.sender_cycle = cycle_index_;
    BoundedQueue& q =
        *f.sender_cycle == cycle_index_ ? ab_[enq_index()] : waiting_;
    if (!q.fits(f)) {
        drop(f, DropSite::QueueOverflow);
        return;
    }
    q.try_push(std::move(f));
}

std::optional<Frame> Cqf3qPort::select(SimTime now) {
    const SimTime start = cycle_start();
    const SimTime st_close = start + params_.st_window_ns;
    if (now < st_close) {
        BoundedQueue& dq = ab_[deq_index()];
        if (!dq.empty()) {
            // Strict priority: a dequeue-queue head blocked by the guard
            // band also blocks the waiting queue.
            if (now + tx_time(dq.front()) <= st_close) return dq.pop();
            return std::nullopt;
        }
        if (!waiting_.empty() && now + tx_time(waiting_.front()) <= st_close) {
            return waiting_.pop();
        }
        return std::nullopt;
    }
    const SimTime cycle_end = start + params_.cycle_time_ns;
    if (!be_q_.empty() && now + tx_time(be_q_.front()) <= cycle_end) {
        return be_q_.pop();
    }
    return std::nullopt;
}

void Cqf3qPort::stamp_for_tx(Frame& f, SimTime now) {
    (void)now;
    if (f.klass == TrafficClass::ST) f.sender_cycle = cycle_index_;
}

void Cqf3qPort::on_timer(const Event& ev) {
    if (ev.kind == EventKind::CycleRollover) {
        const auto leftover =
            static_cast<std::int64_t>(ab_[deq_index()].size());
        if (leftover > 0) stats_.record_carryover(TrafficClass::ST, leftover);
        ++cycle_index_;
        engine_.schedule(ev.time + params_.cycle_time_ns,
                         EventKind::CycleRollover, id_);
    } else if (ev.kind == EventKind::GateChange) {
        engine_.schedule(ev.time + params_.cycle_time_ns,
                         EventKind::GateChange, id_);
    }
}

}  // namespace tsnsim
