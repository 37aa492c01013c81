#pragma once

#include <cstdint>
#include <vector>

#include "tsnsim/event.hpp"

namespace tsnsim {

class Engine;

class EventHandler {
  public:
    virtual ~EventHandler() = default;
    virtual void on_event(const Event& ev) = 0;
};

// Discrete-event kernel: a clock, a totally ordered pending queue, and a
// registry of handlers addressed by EntityId. Single-threaded by design;
// parallelism lives above it, one engine per scenario run.
class Engine {
  public:
    EntityId register_handler(EventHandler* handler);

    // Enqueue an event at absolute time `when`. Scheduling into the past or at
    // an unregistered target is a logic error and throws.
    void schedule(SimTime when, EventKind kind, EntityId target,
                  std::optional<Frame> frame = std::nullopt);

    // Process every event with time <= until, in (time, kind, seq) order,
    // then idle the clock forward to `until`. May be called repeatedly with
    // increasing horizons.
    void run(SimTime until);

    SimTime now() const { return now_; }
    std::uint64_t processed() const { return processed_; }
    std::size_t pending() const { return queue_.size(); }

  private:
    SimTime now_ = 0;
    std::uint64_t next_seq_ = 0;
    std::uint64_t processed_ = 0;
    EventQueue queue_;
    std::vector<EventHandler*> handlers_;
};

}  // namespace tsnsim
