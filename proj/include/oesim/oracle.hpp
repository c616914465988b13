#ifndef OESIM_ORACLE_HPP
#define OESIM_ORACLE_HPP

#include <cstdint>
#include <optional>

namespace oesim {

// First two service-time moments of a traffic class plus its arrival rate,
// all in seconds. rho = lambda * es.
struct ClassMoments {
    double lambda = 0.0; // arrivals per second
    double es = 0.0;     // E[S], seconds
    double es2 = 0.0;    // E[S^2], seconds^2

    double rho() const { return lambda * es; }
};

// Closed-form mean waits of the non-preemptive two-class priority M/G/1:
//   W0   = (lambda_hp E[S_hp^2] + lambda_lp E[S_lp^2]) / 2
//   W_hp = W0 / (1 - rho_hp)
//   W_lp = W0 / ((1 - rho_hp)(1 - rho_hp - rho_lp))
// Waits whose stability condition fails are reported absent.
struct OracleResult {
    double w0 = 0.0;
    std::optional<double> w_hp;
    std::optional<double> w_lp;
    bool stable = false; // rho_hp + rho_lp < 1
};

// Moments of a class with fixed-size packets offered at `load`.
ClassMoments fixed_moments(std::int32_t bytes, double rate_bps, double load);

// Moments of a class whose sizes are discrete uniform on [lo, hi] bytes,
// offered at `load`. E[B^2] is the exact sum over the integer sizes.
ClassMoments lp_moments_uniform(std::int32_t lo_bytes, std::int32_t hi_bytes,
                                double rate_bps, double load);

OracleResult nonpreemptive_priority_waits(const ClassMoments& hp, const ClassMoments& lp);

} // namespace oesim

#endif
