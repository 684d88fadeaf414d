#include "qpest/posterior.hpp"

#include <algorithm>

#include <vector>

#include "qpest/errors.hpp"
#include "qpest/likelihood.hpp"

namespace qpest {

PosteriorReport posterior_update(const PriorDistribution& prior, const DigitString& result) {
    const auto& support = prior.support();
    const auto& weights = prior.weights();
    std::vector<double> updated(support.size());
    double total = 0.0;
    double max_weight = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        updated[i] = likelihood_closed_form(support[i], result) * weights[i];
        total += updated[i];
        max_weight = std::max(max_weight, weights[i]);
    }
    // Exact likelihood zeros evaluate to ~(eps)^2 in floating point; genuine
    // tiny-but-possible results stay many orders of magnitude above this.
    if (total <= 1e-25 * max_weight)
        throw InconsistentResultError("posterior_update: result " + result.to_string() +
                                      " has zero likelihood on the prior support");
    double mean = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        updated[i] /= total;
        mean += support[i] * updated[i];
    }
    double variance = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        const double d = support[i] - mean;
        variance += d * d * updated[i];
    }
    return PosteriorReport{PriorDistribution(std::vector<double>(support), std::move(updated)),
                           mean, variance, result};
}

}  // namespace qpest
