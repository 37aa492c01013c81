#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "tsnsim/frame.hpp"
#include "tsnsim/time.hpp"

namespace tsnsim {

using EntityId = std::uint32_t;

// Declaration order doubles as the tie-break rank for events that share a
// timestamp. Rollovers and gate flips sort ahead of frame arrivals, so a frame
// landing exactly on a cycle boundary is classified into the new cycle, and a
// transmission completing exactly at a gate flip sees the new gate state.
enum class EventKind : std::uint8_t {
    GateChange,
    CycleRollover,
    EpochRollover,
    SourceEmit,
    FrameArrival,
    TxComplete,
    MetricsFlush,
};

struct Event {
    SimTime time = 0;
    EventKind kind = EventKind::MetricsFlush;
    std::uint64_t seq = 0;  // global insertion counter; makes the order total
    EntityId target = 0;
    std::optional<Frame> frame;  // payload for FrameArrival only
};

// Min-queue over (time, kind rank, seq). Equal (time, kind) events therefore
// pop in insertion order, which pins down FIFO behavior for back-to-back
// bursts and makes every run order-deterministic.
class EventQueue {
  public:
    void push(Event ev) { heap_.push(std::move(ev)); }

    Event pop() {
        Event ev = heap_.top();
        heap_.pop();
        return ev;
    }

    const Event& top() const { return heap_.top(); }
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

  private:
    struct After {
        bool operator()(const Event& a, const Event& b) const {
            if (a.time != b.time) return a.time > b.time;
            if (a.kind != b.kind) return a.kind > b.kind;
            return a.seq > b.seq;
        }
    };
    std::priority_queue<Event, std::vector<Event>, After> heap_;
};

}  // namespace tsnsim
