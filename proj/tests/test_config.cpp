#include "oesim/config.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace oesim;

TEST_CASE("empty config yields the full reference defaults") {
    const ExperimentConfig cfg = parse_config_text("");
    CHECK(cfg.base.link_rate_bps == 10'000'000'000);
    CHECK(cfg.base.hp.sizes.lo_bytes == 1200);
    CHECK(cfg.base.hp.sizes.is_fixed());
    CHECK(cfg.base.hp.arrivals == ArrivalMode::Shaped);
    CHECK(cfg.base.lp.sizes.lo_bytes == 40);
    CHECK(cfg.base.lp.sizes.hi_bytes == 1500);
    CHECK(cfg.base.lp.arrivals == ArrivalMode::Poisson);
    CHECK(cfg.base.buffer_bytes == 16'777'216);
    CHECK(cfg.base.packets_per_class == 40'000);
    CHECK(cfg.seeds ==
          std::vector<std::uint64_t>{907, 234, 326, 104, 711, 523, 883, 113, 417, 656});
    REQUIRE(cfg.sweep_hp_loads.size() == 11);
    CHECK(cfg.sweep_hp_loads.front() == doctest::Approx(0.10));
    CHECK(cfg.sweep_hp_loads.back() == doctest::Approx(0.60));
    CHECK(cfg.sweep_lp_loads == std::vector<double>{0.4, 0.45});
}

TEST_CASE("comments and blank lines are ignored") {
    const ExperimentConfig cfg = parse_config_text(
        "# reference experiment\n"
        "\n"
        "hp_load = 0.25   # mid sweep\n"
        "lp_load = 0.45\n");
    CHECK(cfg.base.hp.load == doctest::Approx(0.25));
    CHECK(cfg.base.lp.load == doctest::Approx(0.45));
}

TEST_CASE("out-of-range load is rejected with the line number") {
    try {
        parse_config_text("hp_load = 1.2\n");
        FAIL("expected parse error");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("load must be in (0,1)") != std::string::npos);
        CHECK(msg.find("line 1") != std::string::npos);
    }
}

TEST_CASE("duplicate seeds are rejected") {
    try {
        parse_config_text("seeds = 907 907\n");
        FAIL("expected parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("seeds must be distinct") != std::string::npos);
    }
}

TEST_CASE("unknown keys are named") {
    try {
        parse_config_text("# comment\nfrobnicate = 3\n");
        FAIL("expected parse error");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("unknown key 'frobnicate'") != std::string::npos);
        CHECK(msg.find("line 2") != std::string::npos);
    }
}

TEST_CASE("malformed values are rejected") {
    CHECK_THROWS_AS(parse_config_text("hp_load = fast\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("packets_per_class = -5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("buffer_bytes = 1e6\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("hp_arrivals = bursty\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config_text("hp_load\n"), std::invalid_argument);
}

TEST_CASE("inverted LP size bounds are rejected") {
    CHECK_THROWS_AS(parse_config_text("lp_min_bytes = 100\nlp_max_bytes = 50\n"),
                    std::invalid_argument);
}

TEST_CASE("unsorted sweep lists are rejected") {
    CHECK_THROWS_AS(parse_config_text("sweep_hp_loads = 0.3 0.2\n"), std::invalid_argument);
}

TEST_CASE("explicit keys override defaults") {
    const ExperimentConfig cfg = parse_config_text(
        "link_rate_bps = 1000000000\n"
        "hp_packet_bytes = 300\n"
        "lp_min_bytes = 64\n"
        "lp_max_bytes = 64\n"
        "hp_arrivals = poisson\n"
        "buffer_bytes = 1048576\n"
        "packets_per_class = 1000\n"
        "seeds = 1 2 3\n"
        "sweep_hp_loads = 0.2 0.4\n"
        "sweep_lp_loads = 0.3\n");
    CHECK(cfg.base.link_rate_bps == 1'000'000'000);
    CHECK(cfg.base.hp.sizes.lo_bytes == 300);
    CHECK(cfg.base.hp.arrivals == ArrivalMode::Poisson);
    CHECK(cfg.base.lp.sizes.is_fixed());
    CHECK(cfg.base.buffer_bytes == 1'048'576);
    CHECK(cfg.base.packets_per_class == 1000);
    CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(cfg.sweep_hp_loads == std::vector<double>{0.2, 0.4});
    CHECK(cfg.sweep_lp_loads == std::vector<double>{0.3});
}

TEST_CASE("missing config file reports the path") {
    try {
        parse_config("/nonexistent/path.cfg");
        FAIL("expected error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/path.cfg") != std::string::npos);
    }
}
