#pragma once

#include <vector>

#include "tsnsim/engine.hpp"
#include "tsnsim/frame.hpp"
#include "tsnsim/metrics.hpp"

namespace tsnsim::test {

struct Arrival {
    SimTime time = 0;
    Frame frame;
};

// Terminal handler standing in for a downstream switch: records frame
// arrivals delivered over a link.
class Recorder final : public EventHandler {
public:
    explicit Recorder(Engine& engine) {
        id_ = engine.register_handler(this);
    }

    void on_event(const Event& ev) override {
        arrivals.push_back(Arrival{ev.time, ev.frame ? *ev.frame : Frame{}});
    }

    EntityId id() const { return id_; }

    std::vector<Arrival> arrivals;

private:
    EntityId id_ = 0;
};

inline Frame make_frame(TrafficClass klass, std::int32_t size_bytes,
                        SimTime created_at = 0, std::int32_t hops = 0,
                        std::int32_t stream = 0, std::uint64_t id = 0) {
    Frame f;
    f.id = id;
    f.stream_id = stream;
    f.klass = klass;
    f.size_bytes = size_bytes;
    f.created_at = created_at;
    f.remaining_hops = hops;
    return f;
}

inline Event make_event(SimTime time, EventKind kind, EntityId target) {
    return Event{time, kind, 0, target, std::nullopt};
}

}  // namespace tsnsim::test
