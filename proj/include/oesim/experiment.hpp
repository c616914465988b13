#ifndef OESIM_EXPERIMENT_HPP
#define OESIM_EXPERIMENT_HPP

#include "oesim/config.hpp"
#include "oesim/metrics.hpp"
#include "oesim/oracle.hpp"
#include "oesim/simulation.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace oesim {

struct LoadPoint {
    double hp_load = 0.0;
    double lp_load = 0.0;
};

// One fully-simulated load point: every seeded run plus the
// cross-replication aggregate.
struct PointResults {
    RunConfig cfg;
    std::vector<RunStats> runs; // sorted by seed
    AggregateStats agg;
};

// Simulates every (point, seed) pair. Independent runs may be executed on
// worker threads; results are assembled in (point, seed) order so the
// output never depends on scheduling.
std::vector<PointResults> run_points(const RunConfig& base,
                                     const std::vector<LoadPoint>& points,
                                     const std::vector<std::uint64_t>& seeds);

// CSV emission. Latency columns are nanoseconds with three decimals;
// aggregate files replace `seed` with `n` and append `_ci95` columns.
// Rows are sorted by (lp_load, hp_load, seed, class).
void write_runs_csv(std::ostream& out, const std::vector<PointResults>& results);
void write_aggregate_csv(std::ostream& out, const std::vector<PointResults>& results);

// `run`: the configured (hp_load, lp_load) point only.
// `sweep`: the full sweep_hp_loads x sweep_lp_loads grid.
// Both write <prefix>_runs.csv and <prefix>_aggregate.csv under out_dir.
void run_single(const ExperimentConfig& cfg, const std::string& out_dir);
void run_sweep(const ExperimentConfig& cfg, const std::string& out_dir);

// Oracle cross-validation: Poisson HP forced, buffer forced to 1 GB, each
// point simulated over all seeds and the Cobham mean waits compared
// against the replication CI. Unstable points are flagged, not failed.
struct ValidatePoint {
    double hp_load = 0.0;
    double lp_load = 0.0;
};

struct ValidateRow {
    ValidatePoint point;
    PacketClass cls = PacketClass::HP;
    bool unstable = false;
    bool compared = false;
    bool pass = false;
    double oracle_us = 0.0;
    double sim_mean_us = 0.0;
    double ci95_us = 0.0;
};

std::vector<ValidateRow> run_validate(const ExperimentConfig& cfg,
                                      const std::vector<ValidatePoint>& points);

// Default grid: two stable mixed points, one HP-only point, one point
// whose total load exceeds 1 (flagged unstable).
std::vector<ValidatePoint> default_validate_points();

// Prints the comparison table; returns the number of failed comparisons.
int print_validate_report(std::ostream& out, const std::vector<ValidateRow>& rows);

} // namespace oesim

#endif
