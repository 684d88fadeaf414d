#pragma once

#include <string>
#include <vector>

#include "qpest/prior.hpp"
#include "qpest/protocol.hpp"

namespace qpest {

// Ensemble statistics of the full protocol: sample an eigenvalue from the
// prior, run the noisy ladder, estimate, and aggregate the estimation error.
//
// Runs are split into a fixed number of batches, each driven by its own
// stream seeded config.seed + batch index. Workers pick up whole batches, so
// the report is bit-identical for any thread count, and the batch means give
// the standard error.

enum class EstimatorMode {
    automatic,       // posterior mean while the grid resolves 2^M, else folded
    posterior_mean,  // mean of the Bayesian update on the prior grid
    folded,          // folded decoded result min(R, 1-R)
};

struct MonteCarloOptions {
    long runs = 10000;
    int batches = 20;
    int threads = 0;  // 0 = hardware concurrency
    EstimatorMode estimator = EstimatorMode::automatic;
};

struct RunReport {
    int digit_count = 0;
    double error_p = 0.0;
    std::string ec_name;
    long runs = 0;
    int batches = 0;
    EstimatorMode estimator_used = EstimatorMode::folded;

    double rms_error_scaled = 0.0;     // sqrt(mean (estimate - s)^2)
    double rms_error_physical = 0.0;   // alpha * rms_error_scaled, rad/s
    double rms_std_error_scaled = 0.0; // batch-spread standard error of the rms
    double improvement = 0.0;          // delta0 / rms_error_physical

    ProtocolTime time_per_run;
    std::vector<double> digit_error_rates;  // index l-1 = significance l, vs nearest dyadic
};

RunReport monte_carlo_uncertainty(const PriorDistribution& prior, const ProtocolConfig& config,
                                  const MonteCarloOptions& options = {});

std::string to_string(EstimatorMode mode);

}  // namespace qpest
