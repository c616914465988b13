#include "oesim/simulation.hpp"

#include "oesim/event_queue.hpp"
#include "oesim/rng.hpp"
#include "oesim/switch.hpp"

#include <memory>
#include <optional>
#include <stdexcept>

namespace oesim {

RunKey RunConfig::key() const {
    RunKey k;
    k.hp_load = hp.load;
    k.lp_load = lp.load;
    k.hp_mode = hp.arrivals;
    k.link_rate_bps = link_rate_bps;
    k.buffer_bytes = buffer_bytes;
    k.hp_budget = resolved_hp_budget();
    k.lp_budget = resolved_lp_budget();
    k.hp_bytes = hp.sizes.lo_bytes;
    k.lp_lo_bytes = lp.sizes.lo_bytes;
    k.lp_hi_bytes = lp.sizes.hi_bytes;
    return k;
}

void RunConfig::validate() const {
    if (link_rate_bps <= 0)
        throw std::invalid_argument("RunConfig: link rate must be positive");
    if (buffer_bytes <= 0)
        throw std::invalid_argument("RunConfig: buffer size must be positive");
    if (packets_per_class == 0)
        throw std::invalid_argument("RunConfig: packet budget must be positive");
    for (const TrafficClassConfig* c : {&hp, &lp}) {
        if (c->load < 0.0 || c->load >= 1.0)
            throw std::invalid_argument("RunConfig: load must be in (0,1)");
        if (c->load > 0.0)
            c->sizes.validate();
    }
}

namespace {

// Per-run FIFO and non-preemption tracker, enforced on every departure.
// Ids are issued in arrival order per class; dropped packets leave gaps,
// so FIFO means strictly increasing ids among departures.
struct DepartureChecks {
    std::int64_t link_rate_bps;
    std::int64_t last_id[2] = {-1, -1};
    SimTime last_departure = 0;

    void on_depart(const Packet& p) {
        auto& last = last_id[static_cast<int>(p.cls)];
        if (std::int64_t(p.id) <= last)
            throw std::logic_error("simulate: per-class FIFO order violated");
        last = std::int64_t(p.id);
        if (p.wait() < 0)
            throw std::logic_error("simulate: negative wait");
        if (p.service_start < last_departure)
            throw std::logic_error("simulate: overlapping service intervals");
        if (p.departure - p.service_start != serialization_time(p.size_bytes, link_rate_bps))
            throw std::logic_error("simulate: service span != serialization time");
        last_departure = p.departure;
    }
};

} // namespace

RunStats simulate(const RunConfig& cfg, std::uint64_t seed) {
    cfg.validate();

    RngStreams streams(seed);
    EventQueue calendar;
    PrioritySwitch sw(cfg.link_rate_bps, cfg.buffer_bytes);
    MetricsCollector metrics;
    DepartureChecks checks{cfg.link_rate_bps};

    std::optional<TrafficSource> hp_src;
    std::optional<TrafficSource> lp_src;
    if (cfg.hp.load > 0.0) {
        const double rate = load_to_rate(cfg.hp.load, double(cfg.link_rate_bps),
                                         cfg.hp.sizes.mean_bytes());
        const SimTime spacing = serialization_time(cfg.hp.sizes.hi_bytes, cfg.link_rate_bps);
        hp_src.emplace(cfg.hp, rate, spacing, cfg.resolved_hp_budget(),
                       streams.hp_arrivals, nullptr);
    }
    if (cfg.lp.load > 0.0) {
        const double rate = load_to_rate(cfg.lp.load, double(cfg.link_rate_bps),
                                         cfg.lp.sizes.mean_bytes());
        lp_src.emplace(cfg.lp, rate, 0, cfg.resolved_lp_budget(),
                       streams.lp_arrivals, &streams.lp_sizes);
    }

    if (hp_src && hp_src->next_arrival())
        calendar.schedule(*hp_src->next_arrival(), EventKind::HpArrival);
    if (lp_src && lp_src->next_arrival())
        calendar.schedule(*lp_src->next_arrival(), EventKind::LpArrival);

    auto handle_arrival = [&](TrafficSource& src, EventKind kind) {
        Packet p = src.emit(calendar.now());
        metrics.record_generated(p);
        const auto r = sw.on_arrival(p, calendar.now());
        if (r.dropped)
            metrics.record_drop(p);
        if (r.completion_time)
            calendar.schedule(*r.completion_time, EventKind::ServiceCompletion);
        if (auto t = src.next_arrival())
            calendar.schedule(*t, kind);
        else
            calendar.schedule(calendar.now(), EventKind::GeneratorStop);
    };

    while (auto ev = calendar.next_event()) {
        switch (ev->kind) {
        case EventKind::ServiceCompletion: {
            auto r = sw.on_service_complete(calendar.now());
            checks.on_depart(r.departed);
            metrics.record_departure(r.departed);
            if (r.completion_time)
                calendar.schedule(*r.completion_time, EventKind::ServiceCompletion);
            break;
        }
        case EventKind::HpArrival:
            handle_arrival(*hp_src, EventKind::HpArrival);
            break;
        case EventKind::LpArrival:
            handle_arrival(*lp_src, EventKind::LpArrival);
            break;
        case EventKind::GeneratorStop:
            break; // input side finished; queued work keeps draining
        }
    }

    if (sw.priority_violations() != 0)
        throw std::logic_error("simulate: HP bypassed at a service decision");

    return finalize_run(metrics, sw, hp_src ? &*hp_src : nullptr,
                        lp_src ? &*lp_src : nullptr, cfg.key(), seed, calendar.now());
}

} // namespace oesim
