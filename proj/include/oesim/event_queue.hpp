#ifndef OESIM_EVENT_QUEUE_HPP
#define OESIM_EVENT_QUEUE_HPP

#include "oesim/time.hpp"

#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace oesim {

// Event kinds in tie-break rank order. Completions are delivered before
// arrivals carrying the same timestamp, so a stream arriving with spacing
// exactly equal to its own service time never queues behind itself.
enum class EventKind : std::uint8_t {
    ServiceCompletion = 0,
    HpArrival = 1,
    LpArrival = 2,
    GeneratorStop = 3,
};

struct EventRecord {
    SimTime time = 0;
    EventKind kind = EventKind::ServiceCompletion;
    std::uint64_t seq = 0; // issued at schedule time; FIFO within (time, kind)
};

// Dequeue order is the total order (time, kind rank, seq).
struct EventAfter {
    bool operator()(const EventRecord& a, const EventRecord& b) const {
        if (a.time != b.time)
            return a.time > b.time;
        if (a.kind != b.kind)
            return a.kind > b.kind;
        return a.seq > b.seq;
    }
};

// Event calendar plus simulation clock. The clock never moves backwards:
// scheduling into the past is a logic error in the caller, not a
// recoverable condition.
class EventQueue {
public:
    std::uint64_t schedule(SimTime time, EventKind kind) {
        if (time < clock_)
            throw std::logic_error("EventQueue::schedule: event time precedes clock");
        const std::uint64_t seq = next_seq_++;
        heap_.push(EventRecord{time, kind, seq});
        return seq;
    }

    std::optional<EventRecord> next_event() {
        if (heap_.empty())
            return std::nullopt;
        EventRecord ev = heap_.top();
        heap_.pop();
        clock_ = ev.time;
        return ev;
    }

    SimTime now() const { return clock_; }
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

private:
    std::priority_queue<EventRecord, std::vector<EventRecord>, EventAfter> heap_;
    SimTime clock_ = 0;
    std::uint64_t next_seq_ = 0;
};

} // namespace oesim

#endif
