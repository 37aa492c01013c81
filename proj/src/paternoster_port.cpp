#include "tsnsim/paternoster_port.hpp"

namespace tsnsim {

void PaternosterPort::enqueue(Frame f, SimTime now) {
    (void)now;
    if (f.klass == TrafficClass::BE) {
        if (!be_q_.fits(f)) {
            drop(f, DropSite::QueueOverflow);
            return;
        }
        be_q_.try_push(std::move(f));
        return;
    }
    for (Role r : {Current, Next, Last}) {
        const int p = phys(r);
        if (admitted_[p] + f.bits() <= params_.reservation_bits &&
            q_[p].fits(f)) {
            admitted_[p] += f.bits();
            q_[p].try_push(std::move(f));
            return;
        }
    }
    drop(f, DropSite::QueueOverflow);
}

std::optional<Frame> PaternosterPort::select(SimTime now) {
    (void)now;
    BoundedQueue& prior = q_[phys(Prior)];
    if (!prior.empty()) return prior.pop();
    BoundedQueue& current = q_[phys(Current)];
    if (!current.empty()) return current.pop();
    if (!be_q_.empty()) return be_q_.pop();
    return std::nullopt;
}

void PaternosterPort::on_timer(const Event& ev) {
    // Epoch rollover: purge what prior still holds, rotate roles (current
    // becomes prior, next becomes current, last becomes next, the old prior
    // becomes last), and reset the new last queue's admission budget.
    BoundedQueue& prior = q_[phys(Prior)];
    while (!prior.empty()) {
        Frame f = prior.pop();
        drop(f, DropSite::EpochPurge);
        ++purged_total_;
    }
    base_ = (base_ + 1) & 3;
    admitted_[phys(Last)] = 0;
    ++rollovers_;
    engine_.schedule(ev.time + params_.epoch_ns, EventKind::EpochRollover,
                     id_);
}

}  // namespace tsnsim
