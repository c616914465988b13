#include "oesim/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oesim {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::invalid_argument("config error: line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view v, int line) {
    try {
        std::size_t used = 0;
        const double d = std::stod(std::string(v), &used);
        if (used != v.size())
            fail(line, "malformed number '" + std::string(v) + "'");
        return d;
    } catch (const std::invalid_argument&) {
        fail(line, "malformed number '" + std::string(v) + "'");
    } catch (const std::out_of_range&) {
        fail(line, "number out of range '" + std::string(v) + "'");
    }
}

std::int64_t parse_int(std::string_view v, int line) {
    std::int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        fail(line, "malformed integer '" + std::string(v) + "'");
    return out;
}

std::vector<std::string_view> split_list(std::string_view v) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < v.size()) {
        while (i < v.size() && (v[i] == ' ' || v[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < v.size() && v[j] != ' ' && v[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(v.substr(i, j - i));
        i = j;
    }
    return out;
}

double parse_load(std::string_view v, int line) {
    const double d = parse_double(v, line);
    if (!(d > 0.0) || !(d < 1.0))
        fail(line, "load must be in (0,1)");
    return d;
}

} // namespace

ExperimentConfig default_config() {
    ExperimentConfig cfg;
    cfg.seeds = {907, 234, 326, 104, 711, 523, 883, 113, 417, 656};
    for (int i = 0; i <= 10; ++i)
        cfg.sweep_hp_loads.push_back(0.10 + 0.05 * i);
    cfg.sweep_lp_loads = {0.4, 0.45};
    return cfg;
}

void ExperimentConfig::validate() const {
    base.validate();
    if (seeds.empty())
        throw std::invalid_argument("config error: seeds must be non-empty");
    std::set<std::uint64_t> uniq(seeds.begin(), seeds.end());
    if (uniq.size() != seeds.size())
        throw std::invalid_argument("config error: seeds must be distinct");
    for (const auto* loads : {&sweep_hp_loads, &sweep_lp_loads}) {
        if (!std::is_sorted(loads->begin(), loads->end()))
            throw std::invalid_argument("config error: sweep loads must be sorted ascending");
        for (double l : *loads) {
            if (!(l > 0.0) || !(l < 1.0))
                throw std::invalid_argument("config error: sweep load must be in (0,1)");
        }
    }
}

ExperimentConfig parse_config_text(std::string_view text) {
    ExperimentConfig cfg = default_config();

    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view s{raw};
        if (const auto hash = s.find('#'); hash != std::string_view::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty())
            continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            fail(line, "expected 'key = value'");
        const std::string key{trim(s.substr(0, eq))};
        const std::string_view value = trim(s.substr(eq + 1));
        if (value.empty())
            fail(line, "missing value for '" + key + "'");

        if (key == "link_rate_bps") {
            cfg.base.link_rate_bps = parse_int(value, line);
            if (cfg.base.link_rate_bps <= 0)
                fail(line, "link rate must be positive");
        } else if (key == "hp_load") {
            cfg.base.hp.load = parse_load(value, line);
        } else if (key == "lp_load") {
            cfg.base.lp.load = parse_load(value, line);
        } else if (key == "hp_packet_bytes") {
            const auto b = parse_int(value, line);
            if (b <= 0)
                fail(line, "packet size must be positive");
            cfg.base.hp.sizes = SizeModel::fixed(std::int32_t(b));
        } else if (key == "lp_min_bytes") {
            cfg.base.lp.sizes.lo_bytes = std::int32_t(parse_int(value, line));
        } else if (key == "lp_max_bytes") {
            cfg.base.lp.sizes.hi_bytes = std::int32_t(parse_int(value, line));
        } else if (key == "hp_arrivals") {
            if (value == "shaped")
                cfg.base.hp.arrivals = ArrivalMode::Shaped;
            else if (value == "poisson")
                cfg.base.hp.arrivals = ArrivalMode::Poisson;
            else
                fail(line, "hp_arrivals must be 'shaped' or 'poisson'");
        } else if (key == "buffer_bytes") {
            cfg.base.buffer_bytes = parse_int(value, line);
            if (cfg.base.buffer_bytes <= 0)
                fail(line, "buffer size must be positive");
        } else if (key == "packets_per_class") {
            const auto n = parse_int(value, line);
            if (n <= 0)
                fail(line, "packets_per_class must be positive");
            cfg.base.packets_per_class = std::uint64_t(n);
        } else if (key == "seeds") {
            cfg.seeds.clear();
            for (auto tok : split_list(value)) {
                const auto v = parse_int(tok, line);
                if (v < 0)
                    fail(line, "seed must be non-negative");
                cfg.seeds.push_back(std::uint64_t(v));
            }
            if (cfg.seeds.empty())
                fail(line, "seeds must be non-empty");
            std::set<std::uint64_t> uniq(cfg.seeds.begin(), cfg.seeds.end());
            if (uniq.size() != cfg.seeds.size())
                fail(line, "seeds must be distinct");
        } else if (key == "sweep_hp_loads" || key == "sweep_lp_loads") {
            auto& dst = key == "sweep_hp_loads" ? cfg.sweep_hp_loads : cfg.sweep_lp_loads;
            dst.clear();
            for (auto tok : split_list(value))
                dst.push_back(parse_load(tok, line));
            if (dst.empty())
                fail(line, "sweep list must be non-empty");
            if (!std::is_sorted(dst.begin(), dst.end()))
                fail(line, "sweep loads must be sorted ascending");
        } else {
            fail(line, "unknown key '" + key + "'");
        }
    }

    if (cfg.base.lp.sizes.lo_bytes <= 0 ||
        cfg.base.lp.sizes.hi_bytes < cfg.base.lp.sizes.lo_bytes)
        throw std::invalid_argument(
            "config error: lp_min_bytes/lp_max_bytes must satisfy 0 < min <= max");
    cfg.validate();
    return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return parse_config_text(body.str());
}

} // namespace oesim
