#ifndef OESIM_CONFIG_HPP
#define OESIM_CONFIG_HPP

#include "oesim/simulation.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oesim {

// Experiment description: a base run configuration, the replication
// seeds, and the load grids swept by the `sweep` subcommand.
struct ExperimentConfig {
    RunConfig base;
    std::vector<std::uint64_t> seeds;
    std::vector<double> sweep_hp_loads;
    std::vector<double> sweep_lp_loads;

    void validate() const;
};

// Built-in defaults: 10 Gb/s link, shaped 1200 B HP at load 0.4, Poisson
// uniform 40..1500 B LP at load 0.4, 16 MiB buffers, 40,000 packets per
// class, the ten reference seeds, HP sweep 0.10..0.60 step 0.05 at LP
// loads 0.4 and 0.45.
ExperimentConfig default_config();

// Line-based `key = value` text; `#` starts a comment; list values are
// space-separated. Unknown keys, malformed values and violated invariants
// raise std::invalid_argument naming the offending line.
ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig parse_config(const std::string& path);

} // namespace oesim

#endif
