#include "oesim/rng.hpp"

#include <doctest.h>

#include <cstdint>

using namespace oesim;

TEST_CASE("same seed and tag replay the same sequence") {
    RngStream a(907, "hp_arrivals");
    RngStream b(907, "hp_arrivals");
    for (int i = 0; i < 1000; ++i)
        REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct tags give distinct streams") {
    RngStream a(907, "hp_arrivals");
    RngStream b(907, "lp_arrivals");
    bool differs = false;
    for (int i = 0; i < 16 && !differs; ++i)
        differs = a.next_u64() != b.next_u64();
    CHECK(differs);
}

TEST_CASE("exp_sample determinism and positivity") {
    RngStream a(326, "x");
    RngStream b(326, "x");
    for (int i = 0; i < 1000; ++i) {
        const SimTime t = a.exp_sample(1e6);
        CHECK(t == b.exp_sample(1e6));
        CHECK(t >= 0);
    }
}

TEST_CASE("exp_sample mean at rate 1e6/s is 1us within 1%") {
    RngStream s(104, "mean-check");
    const int n = 1'000'000;
    double sum_ps = 0.0;
    for (int i = 0; i < n; ++i)
        sum_ps += double(s.exp_sample(1e6));
    const double mean_ps = sum_ps / n;
    CHECK(mean_ps == doctest::Approx(1e6).epsilon(0.01)); // 1 us in ps
}

TEST_CASE("exp_sample rejects non-positive rates") {
    RngStream s(1, "bad");
    CHECK_THROWS_AS(s.exp_sample(0.0), std::invalid_argument);
    CHECK_THROWS_AS(s.exp_sample(-3.0), std::invalid_argument);
}

TEST_CASE("uniform_int degenerate range") {
    RngStream s(711, "fixed");
    for (int i = 0; i < 100; ++i)
        CHECK(s.uniform_int(40, 40) == 40);
}

TEST_CASE("uniform_int stays in bounds") {
    RngStream s(523, "bounds");
    for (int i = 0; i < 100'000; ++i) {
        const auto v = s.uniform_int(40, 1500);
        CHECK(v >= 40);
        CHECK(v <= 1500);
    }
}

TEST_CASE("uniform_int mean matches enumeration within 1%") {
    // Independent oracle: enumerate the support.
    double expected = 0.0;
    for (int b = 40; b <= 1500; ++b)
        expected += b;
    expected /= 1461.0;
    REQUIRE(expected == doctest::Approx(770.0));

    RngStream s(883, "mean");
    const int n = 1'000'000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += double(s.uniform_int(40, 1500));
    CHECK(sum / n == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("uniform_int rejects inverted bounds") {
    RngStream s(1, "bad");
    CHECK_THROWS_AS(s.uniform_int(10, 9), std::invalid_argument);
}

TEST_CASE("stream derivation is a pure function of seed and tag") {
    CHECK(RngStream::derive_state(907, "hp_arrivals") ==
          RngStream::derive_state(907, "hp_arrivals"));
    CHECK(RngStream::derive_state(907, "hp_arrivals") !=
          RngStream::derive_state(234, "hp_arrivals"));
    CHECK(RngStream::derive_state(907, "hp_arrivals") !=
          RngStream::derive_state(907, "lp_sizes"));
}
