#include "qpest/metrics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qpest/digit_string.hpp"
#include "qpest/errors.hpp"
#include "qpest/likelihood.hpp"
#include "qpest/posterior.hpp"
#include "qpest/rng.hpp"

namespace qpest {

namespace {

UncertaintyMetrics enumerate_exact(const PriorDistribution& prior, int digit_count) {
    const auto& support = prior.support();
    const auto& weights = prior.weights();
    const std::uint64_t n_results = std::uint64_t{1} << digit_count;

    UncertaintyMetrics out;
    std::vector<double> joint(support.size());
    for (std::uint64_t r = 0; r < n_results; ++r) {
        const DigitString result = DigitString::from_index(r, digit_count);
        double p_result = 0.0;
        for (std::size_t i = 0; i < support.size(); ++i) {
            joint[i] = likelihood_closed_form(support[i], result) * weights[i];
            p_result += joint[i];
        }
        if (p_result <= 0.0) continue;  // result impossible under this prior
        double mean = 0.0;
        for (std::size_t i = 0; i < support.size(); ++i) mean += support[i] * joint[i];
        mean /= p_result;
        double var = 0.0;
        for (std::size_t i = 0; i < support.size(); ++i) {
            const double d = support[i] - mean;
            var += d * d * joint[i];
        }
        var /= p_result;
        out.average_variance += p_result * var;
        out.average_uncertainty += p_result * std::sqrt(var);
        ++out.evaluations;
    }
    return out;
}

// Draw a measurement record through the noiseless adaptive chain.
DigitString sample_result(double s, int digit_count, RandomStream& rng) {
    std::vector<std::uint8_t> history;
    history.reserve(digit_count);
    for (int j = 1; j <= digit_count; ++j) {
        const double p_one = step_outcome_probability(s, digit_count, j, history, 1);
        history.push_back(rng.bernoulli(p_one) ? 1 : 0);
    }
    // history holds digits least significant first
    std::vector<std::uint8_t> bits(history.rbegin(), history.rend());
    return DigitString(std::move(bits));
}

UncertaintyMetrics sample_metrics(const PriorDistribution& prior, int digit_count,
                                  const MetricOptions& options) {
    if (options.samples < 1) throw ArgumentError("average_posterior_metrics: samples must be >= 1");
    RandomStream rng(options.seed);
    UncertaintyMetrics out;
    for (long n = 0; n < options.samples; ++n) {
        const double s = prior.sample(rng);
        const DigitString result = sample_result(s, digit_count, rng);
        const PosteriorReport post = posterior_update(prior, result);
        out.average_variance += post.variance;
        out.average_uncertainty += std::sqrt(post.variance);
    }
    out.average_variance /= static_cast<double>(options.samples);
    out.average_uncertainty /= static_cast<double>(options.samples);
    out.evaluations = options.samples;
    return out;
}

}  // namespace

UncertaintyMetrics average_posterior_metrics(const PriorDistribution& prior, int digit_count,
                                             const MetricOptions& options) {
    if (digit_count < 1) throw ArgumentError("average_posterior_metrics: digit_count must be >= 1");
    if (options.mode == MetricMode::exact) {
        if (digit_count > kMaxExactDigits)
            throw CapacityError("average_posterior_metrics: exact enumeration capped at " +
                                std::to_string(kMaxExactDigits) +
                                " digits; request sampled mode instead");
        return enumerate_exact(prior, digit_count);
    }
    return sample_metrics(prior, digit_count, options);
}

double average_uncertainty(const PriorDistribution& prior, int digit_count) {
    return average_posterior_metrics(prior, digit_count).average_uncertainty;
}

double average_variance(const PriorDistribution& prior, int digit_count) {
    return average_posterior_metrics(prior, digit_count).average_variance;
}

double average_variance_bound(int digit_count) {
    const double half_pow = std::ldexp(1.0, -digit_count);
    return 0.5 * (1.0 + half_pow) * half_pow;
}

}  // namespace qpest
