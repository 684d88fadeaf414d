#include "qpest/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qpest/errors.hpp"
#include "qpest/rng.hpp"

namespace qpest {

namespace {
constexpr double kPi = std::numbers::pi;
}

RamseyConfig RamseyConfig::standard(const ScaleMap& scale, long shots, double tau_m) {
    RamseyConfig config;
    config.interaction_time = kPi / (scale.f * scale.delta0);
    config.shots = shots;
    config.tau_m = tau_m;
    config.validate();
    return config;
}

void RamseyConfig::validate() const {
    if (!(interaction_time > 0.0)) throw ArgumentError("RamseyConfig: interaction_time must be > 0");
    if (shots < 1) throw ArgumentError("RamseyConfig: shots must be >= 1");
    if (tau_m < 0.0) throw ArgumentError("RamseyConfig: tau_m must be >= 0");
}

RamseyEstimate run_ramsey(double s, const RamseyConfig& config, const ScaleMap& scale,
                          RandomStream& rng) {
    config.validate();
    if (!(s >= 0.0 && s <= 0.5)) throw ArgumentError("run_ramsey: s must lie in [0, 1/2]");

    // phase per unit scaled eigenvalue: Omega_s t = (alpha s / 2) t
    const double beta = 0.5 * scale.alpha * config.interaction_time;
    const double p_plus = std::pow(std::cos(beta * s), 2);

    long plus_count = 0;
    for (long k = 0; k < config.shots; ++k)
        if (rng.bernoulli(p_plus)) ++plus_count;

    RamseyEstimate out;
    out.plus_fraction = static_cast<double>(plus_count) / static_cast<double>(config.shots);

    const double clamped = std::clamp(out.plus_fraction, 0.0, 1.0);
    const double x = std::acos(std::sqrt(clamped));  // beta*s mod pi, folded into [0, pi/2]

    // enumerate phase branches (k pi +- x)/beta intersected with [0, 1/2] and
    // keep the one nearest the prior mean; if no branch reaches the window
    // (frequency outside the achievable range), clamp to the nearer boundary
    double best = 0.0;
    double best_dist = std::numeric_limits<double>::infinity();
    bool found = false;
    for (int k = 0; (static_cast<double>(k) * kPi - x) / beta <= 0.5 + 1e-12; ++k) {
        const double base = static_cast<double>(k) * kPi;
        for (const double candidate : {(base + x) / beta, (base - x) / beta}) {
            if (candidate < -1e-12 || candidate > 0.5 + 1e-12) continue;
            const double value = std::clamp(candidate, 0.0, 0.5);
            const double dist = std::abs(value - config.prior_mean);
            if (dist < best_dist) {
                best_dist = dist;
                best = value;
                found = true;
            }
        }
    }
    if (!found) {
        // p_hat below the lowest achievable cos^2 on the window: the nearest
        // attainable phase sits at the far boundary
        const double p_at_half = std::pow(std::cos(beta * 0.5), 2);
        best = std::abs(clamped - 1.0) < std::abs(clamped - p_at_half) ? 0.0 : 0.5;
    }
    out.estimate = best;

    // near an extremum of cos^2 the inversion derivative blows up
    const double resolution = 1.0 / std::sqrt(static_cast<double>(config.shots));
    out.branch_ambiguous = (clamped < resolution) || (clamped > 1.0 - resolution);
    return out;
}

double ramsey_time(const RamseyConfig& config) {
    config.validate();
    return static_cast<double>(config.shots) * (config.interaction_time + config.tau_m);
}

double ramsey_comparison_time(const ProtocolConfig& ladder) {
    ladder.validate();
    return 2.0 * ladder.first_step_time() +
           ladder.tau_m * std::ldexp(1.0, ladder.digit_count);
}

}  // namespace qpest
