#pragma once

#include "qpest/digit_string.hpp"
#include "qpest/prior.hpp"

namespace qpest {

// Bayesian update of a discretized eigenvalue distribution after decoding
// result R. Weights become proportional to p_M(R|s_i) p(s_i).
struct PosteriorReport {
    PriorDistribution posterior;
    double mean = 0.0;      // scaled units
    double variance = 0.0;  // scaled units squared
    DigitString result;
};

// Throws InconsistentResultError when the result has zero likelihood on the
// entire prior support.
PosteriorReport posterior_update(const PriorDistribution& prior, const DigitString& result);

}  // namespace qpest
