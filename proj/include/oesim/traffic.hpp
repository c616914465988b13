#ifndef OESIM_TRAFFIC_HPP
#define OESIM_TRAFFIC_HPP

#include "oesim/packet.hpp"
#include "oesim/rng.hpp"
#include "oesim/time.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace oesim {

enum class ArrivalMode : std::uint8_t { Poisson, Shaped };

// Packet size draw: fixed when lo == hi, else discrete uniform on the
// integers [lo, hi].
struct SizeModel {
    std::int32_t lo_bytes = 0;
    std::int32_t hi_bytes = 0;

    static SizeModel fixed(std::int32_t bytes) { return {bytes, bytes}; }
    static SizeModel uniform(std::int32_t lo, std::int32_t hi) { return {lo, hi}; }

    bool is_fixed() const { return lo_bytes == hi_bytes; }
    double mean_bytes() const { return (lo_bytes + hi_bytes) / 2.0; }

    void validate() const {
        if (lo_bytes <= 0 || hi_bytes < lo_bytes)
            throw std::invalid_argument("SizeModel: need 0 < lo <= hi");
    }
};

struct TrafficClassConfig {
    PacketClass cls = PacketClass::HP;
    double load = 0.0; // fraction of output-link capacity, in [0, 1); 0 disables
    SizeModel sizes;
    ArrivalMode arrivals = ArrivalMode::Poisson;
};

// Arrival rate that offers `load` of `link_rate` with `mean_size`-byte
// packets.
inline double load_to_rate(double load, double link_rate_bps, double mean_size_bytes) {
    if (!(load > 0.0) || !(load < 1.0))
        throw std::invalid_argument("load_to_rate: load must be in (0,1)");
    if (!(link_rate_bps > 0.0) || !(mean_size_bytes > 0.0))
        throw std::invalid_argument("load_to_rate: rate and size must be positive");
    return load * link_rate_bps / (8.0 * mean_size_bytes);
}

// A shaped stream never spaces packets closer than its serialization time.
inline SimTime shaped_gap(SimTime exp_draw, SimTime min_spacing) {
    return exp_draw < min_spacing ? min_spacing : exp_draw;
}

// One packet source. Poisson mode draws exponential gaps; Shaped mode
// floors each gap at `min_spacing` (the packet's own serialization time on
// an input link running at the output rate), which models a stream that
// was already serialized once upstream. Shaping is not compensated for in
// the rate, so the measured effective load of a shaped source sits below
// the nominal load; callers read it back from the metrics.
class TrafficSource {
public:
    TrafficSource(const TrafficClassConfig& cfg, double rate_per_sec,
                  SimTime min_spacing, std::uint64_t budget,
                  RngStream& arrivals, RngStream* sizes)
        : cfg_(cfg), rate_(rate_per_sec), min_spacing_(min_spacing), budget_(budget),
          arrivals_(arrivals), sizes_(sizes) {
        if (!(rate_ > 0.0))
            throw std::invalid_argument("TrafficSource: rate must be positive");
        cfg_.sizes.validate();
        if (budget_ > 0)
            next_arrival_ = next_gap();
    }

    // Time of the next arrival, or nullopt once the budget is spent.
    std::optional<SimTime> next_arrival() const {
        if (emitted_ >= budget_)
            return std::nullopt;
        return next_arrival_;
    }

    // pre: now == *next_arrival(). Emits the packet and advances the source.
    Packet emit(SimTime now) {
        if (emitted_ >= budget_)
            throw std::logic_error("TrafficSource: budget exhausted");
        Packet p;
        p.id = emitted_;
        p.cls = cfg_.cls;
        p.size_bytes = draw_size();
        p.arrival = now;
        ++emitted_;
        if (emitted_ < budget_)
            next_arrival_ = now + next_gap();
        return p;
    }

    std::uint64_t emitted() const { return emitted_; }
    std::uint64_t budget() const { return budget_; }
    bool exhausted() const { return emitted_ >= budget_; }
    PacketClass cls() const { return cfg_.cls; }

private:
    SimTime next_gap() {
        const SimTime gap = arrivals_.exp_sample(rate_);
        return cfg_.arrivals == ArrivalMode::Shaped ? shaped_gap(gap, min_spacing_) : gap;
    }

    std::int32_t draw_size() {
        if (cfg_.sizes.is_fixed())
            return cfg_.sizes.lo_bytes;
        return static_cast<std::int32_t>(
            sizes_->uniform_int(cfg_.sizes.lo_bytes, cfg_.sizes.hi_bytes));
    }

    TrafficClassConfig cfg_;
    double rate_;
    SimTime min_spacing_;
    std::uint64_t budget_;
    std::uint64_t emitted_ = 0;
    SimTime next_arrival_ = 0;
    RngStream& arrivals_;
    RngStream* sizes_; // may be null for fixed-size classes
};

} // namespace oesim

#endif
