#ifndef OESIM_RNG_HPP
#define OESIM_RNG_HPP

#include "oesim/time.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

namespace oesim {

// A seeded draw stream. The engine state is derived from (run seed, tag)
// only, so replications with the same seed replay bit-identical sequences
// and distinct tags give mutually independent streams. mt19937_64 is
// fully specified by the standard, which keeps runs portable across
// compilers; the distributions below are hand-rolled for the same reason
// (std::exponential_distribution and friends are implementation-defined).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view tag)
        : engine_(derive_state(seed, tag)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in (0, 1]; never 0 so log() below stays finite.
    double next_unit() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Exponentially distributed interval with mean 1/rate, quantized to
    // picoseconds.
    SimTime exp_sample(double rate_per_sec) {
        if (!(rate_per_sec > 0.0))
            throw std::invalid_argument("exp_sample: rate must be positive");
        const double seconds = -std::log(next_unit()) / rate_per_sec;
        return static_cast<SimTime>(std::llround(seconds * static_cast<double>(kPsPerSec)));
    }

    // Discrete uniform on [lo, hi] inclusive, unbiased (rejection on the
    // top slice of the 64-bit range).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi)
            throw std::invalid_argument("uniform_int: lo must not exceed hi");
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) // full 64-bit span
            return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % range;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % range);
    }

    static std::uint64_t derive_state(std::uint64_t seed, std::string_view tag) {
        // FNV-1a over the tag, folded into the seed, then finalized with
        // splitmix64 so nearby seeds land far apart.
        std::uint64_t h = 1469598103934665603ull;
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (h | 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

// One bundle per run: arrival processes and LP size draws are kept on
// separate streams so changing one class's traffic never perturbs the
// other's sequence.
struct RngStreams {
    RngStream hp_arrivals;
    RngStream lp_arrivals;
    RngStream lp_sizes;

    explicit RngStreams(std::uint64_t seed)
        : hp_arrivals(seed, "hp_arrivals"),
          lp_arrivals(seed, "lp_arrivals"),
          lp_sizes(seed, "lp_sizes") {}
};

} // namespace oesim

#endif
