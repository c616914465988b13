#include "oesim/oracle.hpp"

#include "oesim/traffic.hpp"

#include <stdexcept>

namespace oesim {

namespace {

// Mean of b^2 over the integers [lo, hi], via the closed form for sums of
// squares. Equals the brute-force sum exactly in double for the sizes
// involved here.
double mean_square_bytes(std::int64_t lo, std::int64_t hi) {
    auto sum_sq = [](std::int64_t n) {
        return double(n) * double(n + 1) * double(2 * n + 1) / 6.0;
    };
    return (sum_sq(hi) - sum_sq(lo - 1)) / double(hi - lo + 1);
}

ClassMoments moments(double mean_b, double mean_b2, double rate_bps, double load) {
    const double per_byte = 8.0 / rate_bps; // seconds per byte
    ClassMoments m;
    m.lambda = load > 0.0 ? load_to_rate(load, rate_bps, mean_b) : 0.0;
    m.es = mean_b * per_byte;
    m.es2 = mean_b2 * per_byte * per_byte;
    return m;
}

} // namespace

ClassMoments fixed_moments(std::int32_t bytes, double rate_bps, double load) {
    if (bytes <= 0 || !(rate_bps > 0.0))
        throw std::invalid_argument("fixed_moments: invalid size or rate");
    const double b = double(bytes);
    return moments(b, b * b, rate_bps, load);
}

ClassMoments lp_moments_uniform(std::int32_t lo_bytes, std::int32_t hi_bytes,
                                double rate_bps, double load) {
    if (lo_bytes <= 0 || lo_bytes > hi_bytes)
        throw std::invalid_argument("lp_moments_uniform: need 0 < lo <= hi");
    if (!(rate_bps > 0.0))
        throw std::invalid_argument("lp_moments_uniform: rate must be positive");
    const double mean_b = (double(lo_bytes) + double(hi_bytes)) / 2.0;
    return moments(mean_b, mean_square_bytes(lo_bytes, hi_bytes), rate_bps, load);
}

OracleResult nonpreemptive_priority_waits(const ClassMoments& hp, const ClassMoments& lp) {
    OracleResult out;
    out.w0 = (hp.lambda * hp.es2 + lp.lambda * lp.es2) / 2.0;
    const double rho_hp = hp.rho();
    const double rho_total = rho_hp + lp.rho();
    out.stable = rho_total < 1.0;
    if (rho_hp < 1.0)
        out.w_hp = out.w0 / (1.0 - rho_hp);
    if (rho_hp < 1.0 && rho_total < 1.0)
        out.w_lp = out.w0 / ((1.0 - rho_hp) * (1.0 - rho_total));
    return out;
}

} // namespace oesim
