#include "tsnsim/engine.hpp"

#include <stdexcept>
#include <string>

namespace tsnsim {

EntityId Engine::register_handler(EventHandler* handler) {
    handlers_.push_back(handler);
    return static_cast<EntityId>(handlers_.size() - 1);
}

void Engine::schedule(SimTime when, EventKind kind, EntityId target,
                      std::optional<Frame> frame) {
    if (when < now_) {
        throw std::logic_error("engine: event scheduled into the past (t=" +
                               std::to_string(when) + " < now=" +
                               std::to_string(now_) + ")");
    }
    if (target >= handlers_.size()) {
        throw std::logic_error("engine: event targets unregistered entity " +
                               std::to_string(target));
    }
    queue_.push(Event{when, kind, next_seq_++, target, std::move(frame)});
}

void Engine::run(SimTime until) {
    if (until < now_) {
        throw std::logic_error("engine: run horizon is in the past");
    }
    while (!queue_.empty() && queue_.top().time <= until) {
        Event ev = queue_.pop();
        now_ = ev.time;
        ++processed_;
        handlers_[ev.target]->on_event(ev);
    }
    // An empty (or future-only) queue simply idles the clock to the horizon.
    now_ = until;
}

}  // namespace tsnsim
