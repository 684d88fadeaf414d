#include "qpest/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "qpest/errors.hpp"
#include "qpest/posterior.hpp"
#include "qpest/rng.hpp"

namespace qpest {

namespace {

struct BatchStats {
    long runs = 0;
    double sum_sq_error = 0.0;
    std::vector<long> digit_errors;
};

BatchStats run_batch(const PriorDistribution& prior, const ProtocolConfig& config,
                     long batch_runs, std::uint64_t stream_seed, bool use_posterior) {
    RandomStream rng(stream_seed);
    const int m = config.digit_count;
    BatchStats stats;
    stats.runs = batch_runs;
    stats.digit_errors.assign(m, 0);
    for (long n = 0; n < batch_runs; ++n) {
        const double s = prior.sample(rng);
        const Transcript transcript = run_noisy(s, config, rng);
        const double estimate = use_posterior
                                    ? posterior_update(prior, transcript.decoded).mean
                                    : transcript.decoded.folded();
        const double err = estimate - s;
        stats.sum_sq_error += err * err;

        const auto truth =
            DigitString::from_index(static_cast<std::uint64_t>(std::llround(std::ldexp(s, m))), m);
        for (int l = 1; l <= m; ++l)
            if (transcript.decoded.digit(l) != truth.digit(l)) ++stats.digit_errors[l - 1];
    }
    return stats;
}

}  // namespace

RunReport monte_carlo_uncertainty(const PriorDistribution& prior, const ProtocolConfig& config,
                                  const MonteCarloOptions& options) {
    config.validate();
    if (options.runs < 1) throw ArgumentError("monte_carlo_uncertainty: runs must be >= 1");
    const int batches = static_cast<int>(std::min<long>(options.batches, options.runs));
    if (batches < 1) throw ArgumentError("monte_carlo_uncertainty: batches must be >= 1");

    bool use_posterior;
    switch (options.estimator) {
        case EstimatorMode::posterior_mean: use_posterior = true; break;
        case EstimatorMode::folded: use_posterior = false; break;
        case EstimatorMode::automatic:
        default:
            // Beyond the grid resolution the Dirichlet kernel aliases against
            // the support and the grid posterior degenerates; fold instead.
            use_posterior = (config.digit_count < 63) &&
                            ((std::uint64_t{1} << config.digit_count) <= prior.size());
            break;
    }

    std::vector<BatchStats> results(batches);
    std::atomic<int> next_batch{0};
    const long base_runs = options.runs / batches;
    const long remainder = options.runs % batches;

    auto worker = [&]() {
        for (;;) {
            const int b = next_batch.fetch_add(1);
            if (b >= batches) return;
            const long batch_runs = base_runs + (b < remainder ? 1 : 0);
            results[b] = run_batch(prior, config, batch_runs, config.seed + static_cast<std::uint64_t>(b),
                                   use_posterior);
        }
    };

    int thread_count = options.threads > 0 ? options.threads
                                           : static_cast<int>(std::thread::hardware_concurrency());
    if (thread_count < 1) thread_count = 1;
    thread_count = std::min(thread_count, batches);
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    RunReport report;
    report.digit_count = config.digit_count;
    report.error_p = config.error_p;
    report.ec_name = config.ec.name();
    report.batches = batches;
    report.estimator_used = use_posterior ? EstimatorMode::posterior_mean : EstimatorMode::folded;
    report.digit_error_rates.assign(config.digit_count, 0.0);

    // merge in batch order so the result is independent of scheduling
    double total_sq = 0.0;
    std::vector<double> batch_mse(batches);
    for (int b = 0; b < batches; ++b) {
        const auto& stats = results[b];
        report.runs += stats.runs;
        total_sq += stats.sum_sq_error;
        batch_mse[b] = stats.runs > 0 ? stats.sum_sq_error / static_cast<double>(stats.runs) : 0.0;
        for (int l = 0; l < config.digit_count; ++l)
            report.digit_error_rates[l] += static_cast<double>(stats.digit_errors[l]);
    }
    const double n = static_cast<double>(report.runs);
    for (auto& rate : report.digit_error_rates) rate /= n;

    const double mse = total_sq / n;
    report.rms_error_scaled = std::sqrt(mse);
    report.rms_error_physical = config.scale.alpha * report.rms_error_scaled;
    report.improvement = report.rms_error_physical > 0.0
                             ? config.scale.delta0 / report.rms_error_physical
                             : std::numeric_limits<double>::infinity();

    if (batches > 1 && report.rms_error_scaled > 0.0) {
        double var = 0.0;
        for (int b = 0; b < batches; ++b) {
            const double d = batch_mse[b] - mse;
            var += d * d;
        }
        var /= static_cast<double>(batches - 1);
        const double se_mse = std::sqrt(var / static_cast<double>(batches));
        report.rms_std_error_scaled = se_mse / (2.0 * report.rms_error_scaled);
    }

    report.time_per_run = protocol_time(config);
    return report;
}

std::string to_string(EstimatorMode mode) {
    switch (mode) {
        case EstimatorMode::automatic: return "auto";
        case EstimatorMode::posterior_mean: return "posterior";
        case EstimatorMode::folded: return "folded";
    }
    return "unknown";
}

}  // namespace qpest
