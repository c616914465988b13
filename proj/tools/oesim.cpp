// Command-line front end: single runs, load sweeps and oracle validation
// for the strict-priority optical Ethernet switch model.

#include "oesim/config.hpp"
#include "oesim/experiment.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    std::string hp_arrivals;
    std::vector<std::uint64_t> seeds;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config file (key = value lines)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out-dir", opts.out_dir, "directory for CSV output files");
    cmd->add_option("--hp-arrivals", opts.hp_arrivals, "override HP arrival process")
        ->check(CLI::IsMember({"shaped", "poisson"}));
    cmd->add_option("--seeds", opts.seeds, "override replication seeds")->delimiter(',');
}

oesim::ExperimentConfig load_config(const CommonOpts& opts) {
    oesim::ExperimentConfig cfg =
        opts.config_path.empty() ? oesim::default_config() : oesim::parse_config(opts.config_path);
    if (!opts.hp_arrivals.empty())
        cfg.base.hp.arrivals = opts.hp_arrivals == "shaped" ? oesim::ArrivalMode::Shaped
                                                            : oesim::ArrivalMode::Poisson;
    if (!opts.seeds.empty()) {
        std::set<std::uint64_t> uniq(opts.seeds.begin(), opts.seeds.end());
        if (uniq.size() != opts.seeds.size())
            throw std::invalid_argument("--seeds: seeds must be distinct");
        cfg.seeds = opts.seeds;
    }
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cut-through optical Ethernet switch simulator (HP/LP strict priority)"};
    app.require_subcommand(1);

    CommonOpts run_opts, sweep_opts, validate_opts;
    CLI::App* run = app.add_subcommand("run", "simulate the configured load point");
    add_common(run, run_opts);
    CLI::App* sweep = app.add_subcommand("sweep", "simulate the configured load grid");
    add_common(sweep, sweep_opts);
    CLI::App* validate =
        app.add_subcommand("validate", "compare Poisson-mode runs against the M/G/1 oracle");
    add_common(validate, validate_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            oesim::run_single(load_config(run_opts), run_opts.out_dir);
        } else if (sweep->parsed()) {
            oesim::run_sweep(load_config(sweep_opts), sweep_opts.out_dir);
        } else if (validate->parsed()) {
            const auto rows = oesim::run_validate(load_config(validate_opts),
                                                  oesim::default_validate_points());
            if (oesim::print_validate_report(std::cout, rows) != 0)
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
