#include "oesim/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oesim {

double ClassStats::effective_load(std::int64_t link_rate_bps) const {
    const SimTime span = last_arrival - first_arrival;
    if (generated < 2 || span <= 0)
        return 0.0;
    const double bits_per_sec = double(bits_offered) / to_seconds(span);
    return bits_per_sec / double(link_rate_bps);
}

void MetricsCollector::record_generated(const Packet& p) {
    ClassStats& s = for_class(p.cls);
    if (s.generated == 0)
        s.first_arrival = p.arrival;
    s.last_arrival = p.arrival;
    ++s.generated;
    s.bits_offered += std::uint64_t(p.size_bytes) * 8;
}

void MetricsCollector::record_drop(const Packet& p) {
    ++for_class(p.cls).dropped;
}

void MetricsCollector::record_departure(const Packet& p) {
    if (p.service_start == Packet::kUnset || p.departure == Packet::kUnset)
        throw std::logic_error("record_departure: packet timestamps not set");
    ClassStats& s = for_class(p.cls);
    const SimTime w = p.wait();
    if (s.wait_count == 0) {
        s.wait_min_ps = w;
        s.wait_max_ps = w;
    } else {
        s.wait_min_ps = std::min(s.wait_min_ps, w);
        s.wait_max_ps = std::max(s.wait_max_ps, w);
    }
    ++s.wait_count;
    s.wait_sum_ps += w;
    ++s.departed;
}

RunStats finalize_run(const MetricsCollector& collector, PrioritySwitch& sw,
                      const TrafficSource* hp_src, const TrafficSource* lp_src,
                      const RunKey& key, std::uint64_t seed, SimTime end_time) {
    if (!sw.drained())
        throw std::logic_error("finalize_run: switch not drained");
    if ((hp_src && !hp_src->exhausted()) || (lp_src && !lp_src->exhausted()))
        throw std::logic_error("finalize_run: source budget not exhausted");

    RunStats rs;
    rs.key = key;
    rs.seed = seed;
    rs.end_time = end_time;
    rs.hp = collector.stats(PacketClass::HP);
    rs.lp = collector.stats(PacketClass::LP);
    rs.hp.occupancy_integral_ps = sw.hp_queue().occupancy_integral(end_time);
    rs.lp.occupancy_integral_ps = sw.lp_queue().occupancy_integral(end_time);

    for (const ClassStats* s : {&rs.hp, &rs.lp}) {
        if (s->departed + s->dropped != s->generated)
            throw std::logic_error("finalize_run: conservation violated");
    }
    return rs;
}

SampleSummary summarize(const std::vector<double>& samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("summarize: need at least 2 samples");
    SampleSummary out;
    out.n = int(samples.size());
    double sum = 0.0;
    for (double x : samples)
        sum += x;
    out.mean = sum / out.n;
    double ss = 0.0;
    for (double x : samples)
        ss += (x - out.mean) * (x - out.mean);
    out.stddev = std::sqrt(ss / (out.n - 1));
    const boost::math::students_t_distribution<double> t(out.n - 1);
    out.ci95 = boost::math::quantile(t, 0.975) * out.stddev / std::sqrt(double(out.n));
    return out;
}

namespace {

ClassAggregate aggregate_class(const std::vector<RunStats>& runs, PacketClass cls) {
    const std::size_t n = runs.size();
    std::vector<double> generated(n), departed(n), dropped(n), plr(n), eff(n);
    std::vector<double> mean_ns(n), min_ns(n), max_ns(n), pdv_ns(n);
    bool has_latency = true;
    for (std::size_t i = 0; i < n; ++i) {
        const ClassStats& s = runs[i].for_class(cls);
        generated[i] = double(s.generated);
        departed[i] = double(s.departed);
        dropped[i] = double(s.dropped);
        plr[i] = s.plr();
        eff[i] = s.effective_load(runs[i].key.link_rate_bps);
        if (!s.has_latency()) {
            has_latency = false;
            continue;
        }
        mean_ns[i] = s.mean_wait_ps() / double(kPsPerNs);
        min_ns[i] = to_ns(s.wait_min_ps);
        max_ns[i] = to_ns(s.wait_max_ps);
        pdv_ns[i] = to_ns(s.pdv_ps());
    }
    ClassAggregate out;
    out.generated = summarize(generated);
    out.departed = summarize(departed);
    out.dropped = summarize(dropped);
    out.plr = summarize(plr);
    out.effective_load = summarize(eff);
    out.has_latency = has_latency;
    if (has_latency) {
        out.mean_latency_ns = summarize(mean_ns);
        out.min_latency_ns = summarize(min_ns);
        out.max_latency_ns = summarize(max_ns);
        out.pdv_ns = summarize(pdv_ns);
    }
    return out;
}

} // namespace

AggregateStats aggregate(std::vector<RunStats> runs) {
    if (runs.size() < 2)
        throw std::invalid_argument("aggregate: need at least 2 runs");
    for (const RunStats& r : runs) {
        if (!(r.key == runs.front().key))
            throw std::invalid_argument("aggregate: mismatched run configurations");
    }
    std::sort(runs.begin(), runs.end(),
              [](const RunStats& a, const RunStats& b) { return a.seed < b.seed; });
    for (std::size_t i = 1; i < runs.size(); ++i) {
        if (runs[i].seed == runs[i - 1].seed)
            throw std::invalid_argument("aggregate: duplicate seed");
    }

    AggregateStats out;
    out.key = runs.front().key;
    out.n = int(runs.size());
    out.hp = aggregate_class(runs, PacketClass::HP);
    out.lp = aggregate_class(runs, PacketClass::LP);
    return out;
}

} // namespace oesim
