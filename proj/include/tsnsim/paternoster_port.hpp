#pragma once

#include "tsnsim/egress_port.hpp"

namespace tsnsim {

// Paternoster egress port: four physical ST queues rotate through the roles
// prior/current/next/last once per epoch. An arriving ST frame is admitted
// to the first of current/next/last whose per-queue admission budget (the
// epoch reservation) and physical capacity both have room, else it is
// dropped. Service is strict priority prior, then current, then BE, with no
// gates and no guard band. At each epoch rollover whatever is left in prior
// is purged as lost, roles rotate, and the queue entering the last role gets
// a fresh admission budget. Epoch boundaries are phase-shifted per switch.
class PaternosterPort final : public EgressPort {
public:
    struct Params {
        SimTime epoch_ns = 50'000;
        SimTime phase_ns = 0;  // first epoch boundary offset, in [0, epoch)
        std::int64_t queue_bits = 524'288;
        std::int64_t reservation_bits = 50'000;
    };

    enum Role { Prior = 0, Current = 1, Next = 2, Last = 3 };

    PaternosterPort(Engine& engine, StatsRegistry& stats, LinkTarget link,
                    Params p)
        : EgressPort(engine, stats, link),
          params_(p),
          q_{BoundedQueue(p.queue_bits), BoundedQueue(p.queue_bits),
             BoundedQueue(p.queue_bits), BoundedQueue(p.queue_bits)},
          be_q_(p.queue_bits) {}

    void start() override {
        // A zero phase makes the first boundary coincide with t=0, where a
        // rotation of all-empty queues would be a no-op; skip straight to
        // the next boundary.
        const SimTime first =
            params_.phase_ns > 0 ? params_.phase_ns : params_.epoch_ns;
        engine_.schedule(first, EventKind::EpochRollover, id_);
    }

    // Physical queue index currently holding a role.
    int phys(Role r) const { return (base_ + static_cast<int>(r)) & 3; }

    const BoundedQueue& queue(Role r) const { return q_[phys(r)]; }
    const BoundedQueue& be_queue() const { return be_q_; }
    std::int64_t admitted_bits(Role r) const { return admitted_[phys(r)]; }
    std::int64_t purged_total() const { return purged_total_; }
    std::int64_t rollovers() const { return rollovers_; }
    const Params& params() const { return params_; }

protected:
    void enqueue(Frame f, SimTime now) override;
    std::optional<Frame> select(SimTime now) override;
    void on_timer(const Event& ev) override;

private:
    Params params_;
    BoundedQueue q_[4];
    BoundedQueue be_q_;
    std::int64_t admitted_[4] = {0, 0, 0, 0};
    int base_ = 0;
    std::int64_t purged_total_ = 0;
    std::int64_t rollovers_ = 0;
};

}  // namespace tsnsim
