#ifndef OESIM_TIME_HPP
#define OESIM_TIME_HPP

#include <cstdint>
#include <stdexcept>

namespace oesim {

// Simulation time in integer picoseconds. One byte at 10 Gb/s is 800 ps
// and at 1 Gb/s is 8000 ps, so serialization times of whole-byte frames
// are exact at the link rates we care about and latency min/max never
// accumulate float error.
using SimTime = std::int64_t;

inline constexpr SimTime kPsPerNs = 1'000;
inline constexpr SimTime kPsPerUs = 1'000'000;
inline constexpr SimTime kPsPerMs = 1'000'000'000;
inline constexpr SimTime kPsPerSec = 1'000'000'000'000;

inline constexpr double to_ns(SimTime t) { return static_cast<double>(t) / kPsPerNs; }
inline constexpr double to_us(SimTime t) { return static_cast<double>(t) / kPsPerUs; }
inline constexpr double to_seconds(SimTime t) { return static_cast<double>(t) / kPsPerSec; }

// Time to clock `size_bytes` onto a link of `rate_bps`, rounded to the
// nearest picosecond (exact whenever rate divides 8e12, which covers
// 1 and 10 Gb/s).
inline SimTime serialization_time(std::int64_t size_bytes, std::int64_t rate_bps) {
    if (size_bytes <= 0)
        throw std::invalid_argument("serialization_time: size must be positive");
    if (rate_bps <= 0)
        throw std::invalid_argument("serialization_time: rate must be positive");
    const __int128 bits_ps = static_cast<__int128>(size_bytes) * 8 * kPsPerSec;
    return static_cast<SimTime>((bits_ps + rate_bps / 2) / rate_bps);
}

} // namespace oesim

#endif
