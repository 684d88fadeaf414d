#pragma once

#include <cstdint>

#include "qpest/prior.hpp"

namespace qpest {

// Result-averaged posterior spread: how uncertain the eigenvalue remains,
// on average over all possible measurement records, after an M-digit run.
//
// Exact mode enumerates all 2^M results R, weighting each posterior by its
// marginal probability p_M(R) = sum_s p_M(R|s) p(s). Sampled mode draws
// (s, R) pairs through the noiseless measurement chain instead; it is the
// only option beyond kMaxExactDigits.

enum class MetricMode { exact, sampled };

struct MetricOptions {
    MetricMode mode = MetricMode::exact;
    long samples = 20000;     // sampled mode only
    std::uint64_t seed = 1;   // sampled mode only
};

struct UncertaintyMetrics {
    double average_uncertainty = 0.0;  // sum_R p(R) sqrt(Var(s|R)), scaled units
    double average_variance = 0.0;     // sum_R p(R) Var(s|R), scaled units squared
    long evaluations = 0;              // enumerated results or Monte Carlo draws
};

inline constexpr int kMaxExactDigits = 20;

UncertaintyMetrics average_posterior_metrics(const PriorDistribution& prior, int digit_count,
                                             const MetricOptions& options = {});

double average_uncertainty(const PriorDistribution& prior, int digit_count);
double average_variance(const PriorDistribution& prior, int digit_count);

// (1 + 2^-M)/2 * 2^-M: proven ceiling for the average variance of any prior
// supported on [0, 1/2].
double average_variance_bound(int digit_count);

}  // namespace qpest
