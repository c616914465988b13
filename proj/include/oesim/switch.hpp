#ifndef OESIM_SWITCH_HPP
#define OESIM_SWITCH_HPP

#include "oesim/packet.hpp"
#include "oesim/time.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>

namespace oesim {

// Byte-bounded FIFO with tail drop. The packet in service is not counted
// against the byte budget (the transmitter holds it). The queue also
// integrates its own occupancy over time so Little's-law checks have an
// accounting path independent of per-packet waits.
class ByteQueue {
public:
    explicit ByteQueue(std::int64_t capacity_bytes) : capacity_(capacity_bytes) {}

    // Returns false (and counts a drop) when the packet does not fit.
    bool offer(const Packet& p, SimTime now) {
        if (bytes_used_ + p.size_bytes > capacity_) {
            ++dropped_;
            return false;
        }
        advance_to(now);
        fifo_.push_back(p);
        bytes_used_ += p.size_bytes;
        return true;
    }

    Packet pop_front(SimTime now) {
        advance_to(now);
        Packet p = fifo_.front();
        fifo_.pop_front();
        bytes_used_ -= p.size_bytes;
        return p;
    }

    bool empty() const { return fifo_.empty(); }
    std::size_t waiting() const { return fifo_.size(); }
    std::int64_t bytes_used() const { return bytes_used_; }
    std::int64_t capacity() const { return capacity_; }
    std::uint64_t dropped() const { return dropped_; }

    // Integral of the waiting-packet count over time, in packet-picoseconds.
    std::int64_t occupancy_integral(SimTime now) {
        advance_to(now);
        return occupancy_integral_;
    }

private:
    void advance_to(SimTime now) {
        occupancy_integral_ += static_cast<std::int64_t>(fifo_.size()) * (now - last_change_);
        last_change_ = now;
    }

    std::deque<Packet> fifo_;
    std::int64_t capacity_;
    std::int64_t bytes_used_ = 0;
    std::uint64_t dropped_ = 0;
    std::int64_t occupancy_integral_ = 0;
    SimTime last_change_ = 0;
};

// The switch under test: two byte-bounded class queues feeding one output
// transmitter under non-preemptive strict priority. HP is always chosen at
// a service decision; a packet already on the wire is never interrupted.
//
// The switch performs no event bookkeeping itself: on_arrival and
// on_service_complete report when a new transmission begins and the caller
// schedules the matching completion event.
class PrioritySwitch {
public:
    struct ArrivalResult {
        bool dropped = false;
        // Set when this arrival found the server idle and service began.
        std::optional<SimTime> completion_time;
    };

    struct CompletionResult {
        Packet departed;
        // Set when another packet immediately entered service.
        std::optional<SimTime> completion_time;
    };

    PrioritySwitch(std::int64_t link_rate_bps, std::int64_t buffer_bytes)
        : hp_(buffer_bytes), lp_(buffer_bytes), link_rate_bps_(link_rate_bps) {
        if (link_rate_bps <= 0)
            throw std::invalid_argument("PrioritySwitch: link rate must be positive");
        if (buffer_bytes <= 0)
            throw std::invalid_argument("PrioritySwitch: buffer size must be positive");
    }

    ArrivalResult on_arrival(const Packet& p, SimTime now) {
        ArrivalResult r;
        ByteQueue& q = queue_for(p.cls);
        if (!q.offer(p, now)) {
            r.dropped = true;
            return r;
        }
        if (!in_service_)
            r.completion_time = start_service(now);
        check_work_conservation();
        return r;
    }

    CompletionResult on_service_complete(SimTime now) {
        if (!in_service_)
            throw std::logic_error("PrioritySwitch: completion with idle server");
        if (completion_time_ != now)
            throw std::logic_error("PrioritySwitch: completion at unexpected time");
        CompletionResult r{*in_service_, std::nullopt};
        r.departed.departure = now;
        in_service_.reset();
        if (!hp_.empty() || !lp_.empty())
            r.completion_time = start_service(now);
        check_work_conservation();
        return r;
    }

    bool busy() const { return in_service_.has_value(); }
    const std::optional<Packet>& in_service() const { return in_service_; }
    ByteQueue& hp_queue() { return hp_; }
    ByteQueue& lp_queue() { return lp_; }
    const ByteQueue& hp_queue() const { return hp_; }
    const ByteQueue& lp_queue() const { return lp_; }
    std::int64_t link_rate_bps() const { return link_rate_bps_; }

    // Diagnostic counter: times an LP packet was chosen while HP waited.
    // Stays zero unless the scheduler is broken.
    std::uint64_t priority_violations() const { return priority_violations_; }

    bool drained() const { return !in_service_ && hp_.empty() && lp_.empty(); }

private:
    // pre: server idle, at least one queue non-empty.
    SimTime start_service(SimTime now) {
        const bool hp_waiting = !hp_.empty();
        ByteQueue& q = hp_waiting ? hp_ : lp_;
        Packet p = q.pop_front(now);
        if (!hp_waiting && !hp_.empty())
            ++priority_violations_; // unreachable by construction
        p.service_start = now;
        in_service_ = p;
        completion_time_ = now + serialization_time(p.size_bytes, link_rate_bps_);
        return completion_time_;
    }

    void check_work_conservation() const {
        if (!in_service_ && (!hp_.empty() || !lp_.empty()))
            throw std::logic_error("PrioritySwitch: idle server with packets waiting");
    }

    ByteQueue& queue_for(PacketClass c) { return c == PacketClass::HP ? hp_ : lp_; }

    ByteQueue hp_;
    ByteQueue lp_;
    std::optional<Packet> in_service_;
    SimTime completion_time_ = 0;
    std::int64_t link_rate_bps_;
    std::uint64_t priority_violations_ = 0;
};

} // namespace oesim

#endif
