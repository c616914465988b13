#include "oesim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <thread>

namespace oesim {

namespace {

RunConfig config_for_point(const RunConfig& base, const LoadPoint& p) {
    RunConfig cfg = base;
    cfg.hp.load = p.hp_load;
    cfg.lp.load = p.lp_load;
    return cfg;
}

} // namespace

std::vector<PointResults> run_points(const RunConfig& base,
                                     const std::vector<LoadPoint>& points,
                                     const std::vector<std::uint64_t>& seeds) {
    if (points.empty() || seeds.empty())
        throw std::invalid_argument("run_points: need at least one point and one seed");

    struct Job {
        std::size_t point;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    jobs.reserve(points.size() * seeds.size());
    for (std::size_t p = 0; p < points.size(); ++p)
        for (std::uint64_t s : seeds)
            jobs.push_back({p, s});

    std::vector<RunStats> slots(jobs.size());
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           unsigned(jobs.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
            slots[i] = simulate(config_for_point(base, points[jobs[i].point]), jobs[i].seed);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    std::vector<PointResults> out(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
        out[p].cfg = config_for_point(base, points[p]);
        out[p].runs.assign(slots.begin() + long(p * seeds.size()),
                           slots.begin() + long((p + 1) * seeds.size()));
        std::sort(out[p].runs.begin(), out[p].runs.end(),
                  [](const RunStats& a, const RunStats& b) { return a.seed < b.seed; });
        if (out[p].runs.size() >= 2)
            out[p].agg = aggregate(out[p].runs);
    }
    return out;
}

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string load_str(double v) { return fmt("%.6g", v); }
std::string ns_str(double ns) { return fmt("%.3f", ns); }
std::string plr_str(double v) { return fmt("%.10g", v); }
std::string eff_str(double v) { return fmt("%.6f", v); }

void sort_results(std::vector<const PointResults*>& view) {
    std::sort(view.begin(), view.end(), [](const PointResults* a, const PointResults* b) {
        if (a->cfg.lp.load != b->cfg.lp.load)
            return a->cfg.lp.load < b->cfg.lp.load;
        return a->cfg.hp.load < b->cfg.hp.load;
    });
}

void write_class_run_row(std::ostream& out, const PointResults& pr, const RunStats& r,
                         PacketClass cls) {
    const ClassStats& s = r.for_class(cls);
    out << load_str(pr.cfg.hp.load) << ',' << load_str(pr.cfg.lp.load) << ',' << r.seed
        << ',' << to_string(cls) << ',' << s.generated << ',' << s.departed << ','
        << s.dropped << ',' << plr_str(s.plr()) << ',';
    if (s.has_latency()) {
        out << ns_str(s.mean_wait_ps() / double(kPsPerNs)) << ','
            << ns_str(to_ns(s.wait_min_ps)) << ',' << ns_str(to_ns(s.wait_max_ps)) << ','
            << ns_str(to_ns(s.pdv_ps()));
    } else {
        out << ",,,"; // latency absent, not zero
    }
    out << ',' << eff_str(s.effective_load(r.key.link_rate_bps)) << '\n';
}

void write_class_agg_row(std::ostream& out, const PointResults& pr, PacketClass cls) {
    const ClassAggregate& a = pr.agg.for_class(cls);
    out << load_str(pr.cfg.hp.load) << ',' << load_str(pr.cfg.lp.load) << ',' << pr.agg.n
        << ',' << to_string(cls) << ',' << fmt("%.6g", a.generated.mean) << ','
        << fmt("%.6g", a.departed.mean) << ',' << fmt("%.6g", a.dropped.mean) << ','
        << plr_str(a.plr.mean) << ',';
    if (a.has_latency) {
        out << ns_str(a.mean_latency_ns.mean) << ',' << ns_str(a.min_latency_ns.mean)
            << ',' << ns_str(a.max_latency_ns.mean) << ',' << ns_str(a.pdv_ns.mean);
    } else {
        out << ",,,";
    }
    out << ',' << eff_str(a.effective_load.mean) << ',' << plr_str(a.plr.ci95) << ',';
    if (a.has_latency) {
        out << ns_str(a.mean_latency_ns.ci95) << ',' << ns_str(a.min_latency_ns.ci95)
            << ',' << ns_str(a.max_latency_ns.ci95) << ',' << ns_str(a.pdv_ns.ci95);
    } else {
        out << ",,,";
    }
    out << ',' << eff_str(a.effective_load.ci95) << '\n';
}

} // namespace

void write_runs_csv(std::ostream& out, const std::vector<PointResults>& results) {
    out << "hp_load,lp_load,seed,class,generated,departed,dropped,plr,"
           "mean_latency_ns,min_latency_ns,max_latency_ns,pdv_ns,effective_load\n";
    std::vector<const PointResults*> view;
    for (const auto& r : results)
        view.push_back(&r);
    sort_results(view);
    for (const PointResults* pr : view)
        for (const RunStats& r : pr->runs)
            for (PacketClass cls : {PacketClass::HP, PacketClass::LP})
                write_class_run_row(out, *pr, r, cls);
}

void write_aggregate_csv(std::ostream& out, const std::vector<PointResults>& results) {
    out << "hp_load,lp_load,n,class,generated,departed,dropped,plr,"
           "mean_latency_ns,min_latency_ns,max_latency_ns,pdv_ns,effective_load,"
           "plr_ci95,mean_latency_ns_ci95,min_latency_ns_ci95,max_latency_ns_ci95,"
           "pdv_ns_ci95,effective_load_ci95\n";
    std::vector<const PointResults*> view;
    for (const auto& r : results)
        view.push_back(&r);
    sort_results(view);
    for (const PointResults* pr : view)
        for (PacketClass cls : {PacketClass::HP, PacketClass::LP})
            write_class_agg_row(out, *pr, cls);
}

namespace {

void write_outputs(const std::vector<PointResults>& results, const std::string& out_dir,
                   const std::string& prefix) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory " + out_dir + ": " +
                                 ec.message());
    for (const char* kind : {"runs", "aggregate"}) {
        const fs::path path = fs::path(out_dir) / (prefix + "_" + kind + ".csv");
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open " + path.string() + " for writing");
        if (std::string_view(kind) == "runs")
            write_runs_csv(out, results);
        else
            write_aggregate_csv(out, results);
        if (!out.flush())
            throw std::runtime_error("write failed: " + path.string());
    }
}

} // namespace

void run_single(const ExperimentConfig& cfg, const std::string& out_dir) {
    const std::vector<LoadPoint> point{{cfg.base.hp.load, cfg.base.lp.load}};
    write_outputs(run_points(cfg.base, point, cfg.seeds), out_dir, "run");
}

void run_sweep(const ExperimentConfig& cfg, const std::string& out_dir) {
    std::vector<LoadPoint> points;
    for (double lp : cfg.sweep_lp_loads)
        for (double hp : cfg.sweep_hp_loads)
            points.push_back({hp, lp});
    write_outputs(run_points(cfg.base, points, cfg.seeds), out_dir, "sweep");
}

std::vector<ValidatePoint> default_validate_points() {
    return {{0.2, 0.3}, {0.4, 0.4}, {0.5, 0.0}, {0.6, 0.45}};
}

std::vector<ValidateRow> run_validate(const ExperimentConfig& cfg,
                                      const std::vector<ValidatePoint>& points) {
    RunConfig base = cfg.base;
    base.hp.arrivals = ArrivalMode::Poisson; // the oracle has no shaped form
    base.buffer_bytes = 1'000'000'000;       // loss-free at stable loads

    std::vector<ValidateRow> rows;
    for (const ValidatePoint& vp : points) {
        const ClassMoments hp_m =
            fixed_moments(base.hp.sizes.lo_bytes, double(base.link_rate_bps), vp.hp_load);
        const ClassMoments lp_m =
            lp_moments_uniform(base.lp.sizes.lo_bytes, base.lp.sizes.hi_bytes,
                               double(base.link_rate_bps), vp.lp_load);
        const OracleResult oracle = nonpreemptive_priority_waits(hp_m, lp_m);

        std::vector<PointResults> res;
        if (oracle.stable) {
            // The closed form describes the stationary mixed system, so
            // both sources must stay active over the same horizon: budget
            // each class in proportion to its arrival rate instead of
            // giving both the same count.
            RunConfig point_base = base;
            if (vp.hp_load > 0.0 && vp.lp_load > 0.0) {
                const double slower = std::min(hp_m.lambda, lp_m.lambda);
                const double horizon = double(base.packets_per_class) / slower;
                point_base.hp_packet_budget =
                    std::uint64_t(std::llround(horizon * hp_m.lambda));
                point_base.lp_packet_budget =
                    std::uint64_t(std::llround(horizon * lp_m.lambda));
            }
            res = run_points(point_base, {{vp.hp_load, vp.lp_load}}, cfg.seeds);
        }

        for (PacketClass cls : {PacketClass::HP, PacketClass::LP}) {
            ValidateRow row;
            row.point = vp;
            row.cls = cls;
            row.unstable = !oracle.stable;
            const double load = cls == PacketClass::HP ? vp.hp_load : vp.lp_load;
            const auto oracle_wait = cls == PacketClass::HP ? oracle.w_hp : oracle.w_lp;
            if (!oracle.stable || load <= 0.0 || !oracle_wait) {
                rows.push_back(row);
                continue;
            }
            const ClassAggregate& agg = res.front().agg.for_class(cls);
            row.compared = true;
            row.oracle_us = *oracle_wait * 1e6;
            row.sim_mean_us = agg.mean_latency_ns.mean / 1e3;
            row.ci95_us = agg.mean_latency_ns.ci95 / 1e3;
            row.pass = std::abs(row.sim_mean_us - row.oracle_us) <= row.ci95_us;
            rows.push_back(row);
        }
    }
    return rows;
}

int print_validate_report(std::ostream& out, const std::vector<ValidateRow>& rows) {
    int failures = 0;
    out << "rho_hp  rho_lp  class  oracle_us  sim_mean_us  ci95_us   result\n";
    for (const ValidateRow& r : rows) {
        char line[160];
        if (r.unstable) {
            std::snprintf(line, sizeof line, "%-7.6g %-7.6g %-6s %-10s %-12s %-9s unstable",
                          r.point.hp_load, r.point.lp_load, to_string(r.cls), "-", "-", "-");
        } else if (!r.compared) {
            std::snprintf(line, sizeof line, "%-7.6g %-7.6g %-6s %-10s %-12s %-9s no-traffic",
                          r.point.hp_load, r.point.lp_load, to_string(r.cls), "-", "-", "-");
        } else {
            std::snprintf(line, sizeof line, "%-7.6g %-7.6g %-6s %-10.6f %-12.6f %-9.6f %s",
                          r.point.hp_load, r.point.lp_load, to_string(r.cls), r.oracle_us,
                          r.sim_mean_us, r.ci95_us, r.pass ? "pass" : "FAIL");
            if (!r.pass)
                ++failures;
        }
        out << line << '\n';
    }
    out << (failures == 0 ? "validate: all compared points pass\n"
                          : "validate: FAILURES present\n");
    return failures;
}

} // namespace oesim
