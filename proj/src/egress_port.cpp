#include "tsnsim/egress_port.hpp"

#include <stdexcept>

namespace tsnsim {

void EgressPort::on_event(const Event& ev) {
    switch (ev.kind) {
        case EventKind::TxComplete:
            busy_ = false;
            try_transmit(ev.time);
            break;
        case EventKind::GateChange:
        case EventKind::CycleRollover:
        case EventKind::EpochRollover:
            on_timer(ev);
            try_transmit(ev.time);
            break;
        default:
            throw std::logic_error("egress port received unexpected event kind");
    }
}

void EgressPort::try_transmit(SimTime now) {
    if (busy_) return;
    std::optional<Frame> f = select(now);
    if (!f) return;
    stamp_for_tx(*f, now);
    busy_ = true;
    const SimTime tx = tx_time(*f);
    if (tx_observer_) tx_observer_(*f, now, now + tx);
    engine_.schedule(now + tx, EventKind::TxComplete, id_);
    engine_.schedule(now + tx + link_.prop_delay_ns, EventKind::FrameArrival,
                     link_.dst, std::move(*f));
}

}  // namespace tsnsim
