#pragma once

#include <cstdint>
#include <deque>

#include "tsnsim/frame.hpp"

namespace tsnsim {

// FIFO of frames with a capacity expressed in bits of buffered payload.
// A frame is admitted only if its full size fits in the remaining space.
class BoundedQueue {
public:
    explicit BoundedQueue(std::int64_t capacity_bits)
        : capacity_bits_(capacity_bits) {}

    bool fits(const Frame& f) const {
        return occupancy_bits_ + f.bits() <= capacity_bits_;
    }

    // Returns false (and leaves the queue untouched) when the frame
    // does not fit.
    bool try_push(Frame f) {
        if (!fits(f)) return false;
        occupancy_bits_ += f.bits();
        frames_.push_back(std::move(f));
        return true;
    }

    Frame pop() {
        Frame f = std::move(frames_.front());
        frames_.pop_front();
        occupancy_bits_ -= f.bits();
        return f;
    }

    const Frame& front() const { return frames_.front(); }

    bool empty() const { return frames_.empty(); }
    std::size_t size() const { return frames_.size(); }
    std::int64_t occupancy_bits() const { return occupancy_bits_; }
    std::int64_t capacity_bits() const { return capacity_bits_; }

    void clear() {
        frames_.clear();
        occupancy_bits_ = 0;
    }

    // Drains the queue and returns its contents in FIFO order.
    std::deque<Frame> take_all() {
        std::deque<Frame> out;
        out.swap(frames_);
        occupancy_bits_ = 0;
        return out;
    }

private:
    std::int64_t capacity_bits_;
    std::int64_t occupancy_bits_ = 0;
    std::deque<Frame> frames_;
};

}  // namespace tsnsim
