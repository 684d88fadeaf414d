#pragma once

#include "qpest/protocol.hpp"
#include "qpest/scale_map.hpp"

namespace qpest {

class RandomStream;

// Fixed-interaction-time baseline: every shot precesses for the same time and
// is measured; the eigenvalue estimate comes from inverting the observed
// plus-state frequency through cos^2.

struct RamseyConfig {
    double interaction_time = 0.0;  // seconds per shot
    long shots = 1;
    double tau_m = 0.0;             // seconds per measurement
    double prior_mean = 0.25;       // scaled; used to resolve inversion branches

    // Conventional choice pi / (f delta0): one cos^2 period over s in [0, 1/2].
    static RamseyConfig standard(const ScaleMap& scale, long shots, double tau_m);

    void validate() const;
};

struct RamseyEstimate {
    double estimate = 0.0;        // scaled eigenvalue
    double plus_fraction = 0.0;   // observed frequency of the + outcome
    bool branch_ambiguous = false;  // frequency within 1/sqrt(shots) of a cos^2 extremum
};

// Samples `shots` outcomes with P(+) = cos^2(alpha s t / 2) and inverts the
// frequency; among phase branches consistent with [0, 1/2], the one nearest
// prior_mean wins.
RamseyEstimate run_ramsey(double s, const RamseyConfig& config, const ScaleMap& scale,
                          RandomStream& rng);

// shots * (interaction_time + tau_m)
double ramsey_time(const RamseyConfig& config);

// Time for the Ramsey scheme to match an M-digit ladder: 2 t_1 + tau_m 2^M.
double ramsey_comparison_time(const ProtocolConfig& ladder);

}  // namespace qpest
