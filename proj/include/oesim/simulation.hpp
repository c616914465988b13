#ifndef OESIM_SIMULATION_HPP
#define OESIM_SIMULATION_HPP

#include "oesim/metrics.hpp"
#include "oesim/traffic.hpp"

#include <cstdint>

namespace oesim {

// One seeded run of the switch model. Defaults mirror the reference
// experiment: 10 Gb/s output link, shaped 1200-byte HP, Poisson LP with
// uniform 40..1500-byte frames, 16 MiB class buffers, 40,000 packets per
// class.
struct RunConfig {
    std::int64_t link_rate_bps = 10'000'000'000;
    TrafficClassConfig hp{PacketClass::HP, 0.4, SizeModel::fixed(1200), ArrivalMode::Shaped};
    TrafficClassConfig lp{PacketClass::LP, 0.4, SizeModel::uniform(40, 1500), ArrivalMode::Poisson};
    std::int64_t buffer_bytes = 16 * 1024 * 1024;
    std::uint64_t packets_per_class = 40'000;
    // Per-class overrides (0 = packets_per_class). The oracle validation
    // uses these to give both classes the same time horizon; with equal
    // counts the slower class keeps running alone after the faster one
    // stops, which dilutes its measured mean wait below the steady-state
    // value the closed form predicts.
    std::uint64_t hp_packet_budget = 0;
    std::uint64_t lp_packet_budget = 0;

    std::uint64_t resolved_hp_budget() const {
        return hp_packet_budget ? hp_packet_budget : packets_per_class;
    }
    std::uint64_t resolved_lp_budget() const {
        return lp_packet_budget ? lp_packet_budget : packets_per_class;
    }

    RunKey key() const;
    void validate() const;
};

// Runs to completion (all arrivals emitted, queues drained) and returns
// the frozen statistics. Same config and seed give bit-identical results.
// Structural invariants (work conservation, per-class FIFO, strict
// priority, non-preemption, conservation of packets) are enforced inline
// and violations surface as std::logic_error.
RunStats simulate(const RunConfig& cfg, std::uint64_t seed);

} // namespace oesim

#endif
