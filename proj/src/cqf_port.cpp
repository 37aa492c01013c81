#include "tsnsim/cqf_port.hpp"

#include <cassert>

namespace tsnsim {

void CqfPort::enqueue(Frame f, SimTime now) {
    (void)now;
    BoundedQueue& q =
        f.klass == TrafficClass::ST ? st_q_[enq_index()] : be_q_;
    if (!q.fits(f)) {
        drop(f, DropSite::QueueOverflow);
        return;
    }
    q.try_push(std::move(f));
}

std::optional<Frame> CqfPort::select(SimTime now) {
    const SimTime start = cycle_start();
    assert(now >= start && now < start + params_.cycle_time_ns);
    const SimTime st_close = start + params_.st_window_ns;
    if (now < st_close) {
        BoundedQueue& dq = st_q_[deq_index()];
        if (!dq.empty() && now + tx_time(dq.front()) <= st_close) {
            return dq.pop();
        }
        return std::nullopt;
    }
    const SimTime cycle_end = start + params_.cycle_time_ns;
    if (!be_q_.empty() && now + tx_time(be_q_.front()) <= cycle_end) {
        return be_q_.pop();
    }
    return std::nullopt;
}

void CqfPort::on_timer(const Event& ev) {
    if (ev.kind == EventKind::CycleRollover) {
        // Frames still waiting in the dequeue queue are retained; the queue
        // swap parks them until its next dequeue turn, two cycles after the
        // one they were meant for.
        const auto leftover =
            static_cast<std::int64_t>(st_q_[deq_index()].size());
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
