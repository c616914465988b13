#include "oesim/metrics.hpp"

#include <doctest.h>

#include <stdexcept>

#include <vector>

using namespace oesim;

namespace {

Packet departed_packet(PacketClass cls, SimTime arrival, SimTime wait, SimTime ser = 960'000) {
    Packet p;
    p.cls = cls;
    p.size_bytes = 1200;
    p.arrival = arrival;
    p.service_start = arrival + wait;
    p.departure = p.service_start + ser;
    return p;
}

} // namespace

TEST_CASE("latency accumulation: mean, min, max, pdv") {
    MetricsCollector c;
    for (SimTime w : {SimTime(0), 100 * kPsPerNs, 200 * kPsPerNs}) {
        Packet p = departed_packet(PacketClass::HP, 0, w);
        c.record_generated(p);
        c.record_departure(p);
    }
    const ClassStats& s = c.stats(PacketClass::HP);
    CHECK(s.mean_wait_ps() == doctest::Approx(100'000.0));
    CHECK(s.wait_min_ps == 0);
    CHECK(s.wait_max_ps == 200'000);
    CHECK(s.pdv_ps() == 200'000);
}

TEST_CASE("single departure has zero pdv") {
    MetricsCollector c;
    Packet p = departed_packet(PacketClass::LP, 5, 12'345);
    c.record_generated(p);
    c.record_departure(p);
    CHECK(c.stats(PacketClass::LP).pdv_ps() == 0);
}

TEST_CASE("no departures leaves latency absent, not zero") {
    MetricsCollector c;
    CHECK_FALSE(c.stats(PacketClass::HP).has_latency());
}

TEST_CASE("departure with unset timestamps is a logic error") {
    MetricsCollector c;
    Packet p;
    p.arrival = 0; // service_start/departure left unset
    CHECK_THROWS_AS(c.record_departure(p), std::logic_error);
}

TEST_CASE("plr arithmetic") {
    ClassStats s;
    s.generated = 10;
    s.dropped = 2;
    s.departed = 8;
    CHECK(s.plr() == doctest::Approx(0.2));

    ClassStats lp;
    lp.generated = 40'000;
    lp.dropped = 4;
    lp.departed = 39'996;
    CHECK(lp.plr() == doctest::Approx(0.0001));

    ClassStats none;
    CHECK(none.plr() == 0.0);
}

TEST_CASE("summarize matches hand arithmetic for 1..10") {
    std::vector<double> xs;
    for (int i = 1; i <= 10; ++i)
        xs.push_back(i);
    const SampleSummary s = summarize(xs);
    CHECK(s.mean == doctest::Approx(5.5));
    CHECK(s.stddev == doctest::Approx(3.02765).epsilon(1e-5));
    // t(0.975, 9 dof) = 2.262; half-width = 2.262 * s / sqrt(10)
    CHECK(s.ci95 == doctest::Approx(2.166).epsilon(1e-3));
}

TEST_CASE("summarize of identical values has zero half-width") {
    const SampleSummary s = summarize({7.0, 7.0, 7.0, 7.0});
    CHECK(s.mean == 7.0);
    CHECK(s.ci95 == 0.0);
}

TEST_CASE("summarize requires two samples") {
    CHECK_THROWS_AS(summarize({1.0}), std::invalid_argument);
}

TEST_CASE("streaming mean equals batch mean regardless of order") {
    std::vector<SimTime> waits = {5'000, 1, 999'999, 42, 123'456, 7};
    MetricsCollector fwd, rev;
    for (std::size_t i = 0; i < waits.size(); ++i) {
        Packet a = departed_packet(PacketClass::HP, 0, waits[i]);
        Packet b = departed_packet(PacketClass::HP, 0, waits[waits.size() - 1 - i]);
        fwd.record_departure(a);
        rev.record_departure(b);
    }
    // The integer sum is order-independent, so the means agree exactly.
    CHECK(fwd.stats(PacketClass::HP).wait_sum_ps == rev.stats(PacketClass::HP).wait_sum_ps);
    CHECK(fwd.stats(PacketClass::HP).mean_wait_ps() ==
          rev.stats(PacketClass::HP).mean_wait_ps());
}

namespace {

RunStats stats_with(std::uint64_t seed, double hp_load, SimTime hp_wait) {
    RunStats r;
    r.key.hp_load = hp_load;
    r.key.lp_load = 0.4;
    r.key.link_rate_bps = 10'000'000'000;
    r.seed = seed;
    r.hp.generated = r.hp.departed = 10;
    r.hp.wait_count = 10;
    r.hp.wait_sum_ps = hp_wait * 10;
    r.hp.wait_min_ps = hp_wait;
    r.hp.wait_max_ps = hp_wait;
    r.hp.first_arrival = 0;
    r.hp.last_arrival = 1'000'000;
    r.hp.bits_offered = 96'000;
    r.lp = r.hp;
    return r;
}

} // namespace

TEST_CASE("aggregate requires at least two runs and matching keys") {
    CHECK_THROWS_AS(aggregate({stats_with(1, 0.4, 100)}), std::invalid_argument);
    CHECK_THROWS_AS(aggregate({stats_with(1, 0.4, 100), stats_with(2, 0.5, 100)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(aggregate({stats_with(1, 0.4, 100), stats_with(1, 0.4, 100)}),
                    std::invalid_argument); // duplicate seed
}

TEST_CASE("aggregate is independent of input order") {
    std::vector<RunStats> a = {stats_with(1, 0.4, 100'000), stats_with(2, 0.4, 200'000),
                               stats_with(3, 0.4, 300'000)};
    std::vector<RunStats> b = {a[2], a[0], a[1]};
    const AggregateStats ra = aggregate(a);
    const AggregateStats rb = aggregate(b);
    CHECK(ra.n == 3);
    CHECK(ra.hp.mean_latency_ns.mean == rb.hp.mean_latency_ns.mean);
    CHECK(ra.hp.mean_latency_ns.ci95 == rb.hp.mean_latency_ns.ci95);
    CHECK(ra.hp.mean_latency_ns.mean == doctest::Approx(200.0));
}

TEST_CASE("finalize_run rejects a non-drained switch") {
    MetricsCollector c;
    PrioritySwitch sw(10'000'000'000, 1 << 20);
    Packet p;
    p.cls = PacketClass::HP;
    p.size_bytes = 1200;
    p.arrival = 0;
    c.record_generated(p);
    sw.on_arrival(p, 0); // still in service: run not drained
    CHECK_THROWS_AS(finalize_run(c, sw, nullptr, nullptr, RunKey{}, 1, 0),
                    std::logic_error);
}

TEST_CASE("finalize_run rejects broken conservation") {
    MetricsCollector c;
    PrioritySwitch sw(10'000'000'000, 1 << 20);
    Packet p;
    p.cls = PacketClass::LP;
    p.size_bytes = 100;
    p.arrival = 0;
    c.record_generated(p); // generated but neither departed nor dropped
    CHECK_THROWS_AS(finalize_run(c, sw, nullptr, nullptr, RunKey{}, 1, 0),
                    std::logic_error);
}

TEST_CASE("finalize_run on a drained run satisfies the RunStats invariants") {
    MetricsCollector c;
    PrioritySwitch sw(10'000'000'000, 1 << 20);
    SimTime t = 0;
    for (int i = 0; i < 10; ++i) {
        Packet p = departed_packet(PacketClass::HP, t, 0);
        c.record_generated(p);
        if (i < 2) {
            c.record_drop(p); // tail-dropped packets never enter the switch
        } else {
            auto r = sw.on_arrival(p, p.arrival);
            REQUIRE(r.completion_time);
            auto done = sw.on_service_complete(*r.completion_time);
            c.record_departure(done.departed);
            t = done.departed.departure + 1000;
        }
    }
    const RunStats rs = finalize_run(c, sw, nullptr, nullptr, RunKey{}, 42, t);
    CHECK(rs.hp.plr() == doctest::Approx(0.2));
    CHECK(rs.hp.departed + rs.hp.dropped == rs.hp.generated);
    CHECK(rs.hp.pdv_ps() >= 0);
}

TEST_CASE("identical runs aggregate to zero half-width") {
    const AggregateStats agg =
        aggregate({stats_with(1, 0.4, 100'000), stats_with(2, 0.4, 100'000)});
    CHECK(agg.hp.pdv_ns.ci95 == 0.0);
    CHECK(agg.hp.mean_latency_ns.ci95 == 0.0);
}
