#ifndef OESIM_METRICS_HPP
#define OESIM_METRICS_HPP

#include "oesim/packet.hpp"
#include "oesim/switch.hpp"
#include "oesim/time.hpp"
#include "oesim/traffic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oesim {

// Everything that identifies a run except its seed. Used to refuse
// aggregation across mismatched configurations.
struct RunKey {
    double hp_load = 0.0;
    double lp_load = 0.0;
    ArrivalMode hp_mode = ArrivalMode::Shaped;
    std::int64_t link_rate_bps = 0;
    std::int64_t buffer_bytes = 0;
    std::uint64_t hp_budget = 0;
    std::uint64_t lp_budget = 0;
    std::int32_t hp_bytes = 0;
    std::int32_t lp_lo_bytes = 0;
    std::int32_t lp_hi_bytes = 0;

    bool operator==(const RunKey&) const = default;
};

// Per-class tallies for one run. Waits are streamed (count/sum/min/max);
// no sample retention.
struct ClassStats {
    std::uint64_t generated = 0;
    std::uint64_t departed = 0;
    std::uint64_t dropped = 0;
    std::uint64_t bits_offered = 0;
    SimTime first_arrival = Packet::kUnset;
    SimTime last_arrival = Packet::kUnset;
    std::uint64_t wait_count = 0;
    std::int64_t wait_sum_ps = 0;
    SimTime wait_min_ps = 0;
    SimTime wait_max_ps = 0;
    // From ByteQueue: integral of waiting-packet count over time.
    std::int64_t occupancy_integral_ps = 0;

    bool operator==(const ClassStats&) const = default;

    bool has_latency() const { return wait_count > 0; }
    double plr() const { return generated == 0 ? 0.0 : double(dropped) / double(generated); }
    double mean_wait_ps() const { return double(wait_sum_ps) / double(wait_count); }
    SimTime pdv_ps() const { return wait_max_ps - wait_min_ps; }

    // Offered bit-rate between first and last arrival, as a fraction of
    // the link rate. With a shaped source this is the number to compare
    // against the nominal load.
    double effective_load(std::int64_t link_rate_bps) const;
};

struct RunStats {
    RunKey key;
    std::uint64_t seed = 0;
    SimTime end_time = 0; // clock when the run drained
    ClassStats hp;
    ClassStats lp;

    bool operator==(const RunStats&) const = default;

    const ClassStats& for_class(PacketClass c) const { return c == PacketClass::HP ? hp : lp; }
};

// Streaming per-run collector fed by the simulation loop.
class MetricsCollector {
public:
    void record_generated(const Packet& p);
    void record_drop(const Packet& p);
    void record_departure(const Packet& p);

    const ClassStats& stats(PacketClass c) const { return c == PacketClass::HP ? hp_ : lp_; }

private:
    ClassStats& for_class(PacketClass c) { return c == PacketClass::HP ? hp_ : lp_; }
    ClassStats hp_;
    ClassStats lp_;
};

// pre: both sources exhausted, switch drained. Pulls the occupancy
// integrals out of the queues and freezes the run's statistics.
RunStats finalize_run(const MetricsCollector& collector, PrioritySwitch& sw,
                      const TrafficSource* hp_src, const TrafficSource* lp_src,
                      const RunKey& key, std::uint64_t seed, SimTime end_time);

// Sample mean, sample standard deviation and 95% half-width (Student t,
// n-1 degrees of freedom) over one metric across replications.
struct SampleSummary {
    double mean = 0.0;
    double stddev = 0.0;
    double ci95 = 0.0;
    int n = 0;
};

SampleSummary summarize(const std::vector<double>& samples);

// Cross-replication aggregate for one class at one load point.
struct ClassAggregate {
    SampleSummary generated;
    SampleSummary departed;
    SampleSummary dropped;
    SampleSummary plr;
    SampleSummary effective_load;
    bool has_latency = false; // false if any run had no departures
    SampleSummary mean_latency_ns;
    SampleSummary min_latency_ns;
    SampleSummary max_latency_ns;
    SampleSummary pdv_ns;
};

struct AggregateStats {
    RunKey key;
    int n = 0;
    ClassAggregate hp;
    ClassAggregate lp;

    const ClassAggregate& for_class(PacketClass c) const { return c == PacketClass::HP ? hp : lp; }
};

// pre: >= 2 runs, identical keys. Runs are re-ordered by seed before
// reduction so thread scheduling can never change the result.
AggregateStats aggregate(std::vector<RunStats> runs);

} // namespace oesim

#endif
