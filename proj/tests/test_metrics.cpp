#include <cmath>

#include "gtest/gtest.h"
#include "qpest/errors.hpp"
#include "qpest/metrics.hpp"

using namespace qpest;

TEST(Metrics, PointMassHasZeroSpread) {
    const auto prior = PriorDistribution::point_mass(0.3125);  // 4 binary digits
    for (int m : {4, 6, 9}) {
        const auto metrics = average_posterior_metrics(prior, m);
        EXPECT_NEAR(metrics.average_variance, 0.0, 1e-18);
        EXPECT_NEAR(metrics.average_uncertainty, 0.0, 1e-12);
    }
}

TEST(Metrics, VarianceBoundHoldsOnUniformPrior) {
    const auto prior = PriorDistribution::uniform(1024);
    for (int m = 1; m <= 10; ++m) {
        const auto metrics = average_posterior_metrics(prior, m);
        const double bound = average_variance_bound(m);
        EXPECT_LE(metrics.average_variance, bound) << "M=" << m;
        // Cauchy-Schwarz: mean posterior std cannot exceed sqrt(mean variance)
        EXPECT_LE(metrics.average_uncertainty, std::sqrt(metrics.average_variance) + 1e-15);
        EXPECT_LE(metrics.average_uncertainty, std::sqrt(bound));
    }
}

TEST(Metrics, AverageVarianceDoesNotExceedPrior) {
    const auto prior = PriorDistribution::uniform(1024);
    const auto metrics = average_posterior_metrics(prior, 8);
    EXPECT_LE(metrics.average_variance, prior.variance());
}

TEST(Metrics, SampledModeAgreesWithExact) {
    const auto prior = PriorDistribution::uniform(512);
    const auto exact = average_posterior_metrics(prior, 6);
    MetricOptions options;
    options.mode = MetricMode::sampled;
    options.samples = 40000;
    options.seed = 42;
    const auto sampled = average_posterior_metrics(prior, 6, options);
    EXPECT_NEAR(sampled.average_variance, exact.average_variance, 0.15 * exact.average_variance);
    EXPECT_NEAR(sampled.average_uncertainty, exact.average_uncertainty,
                0.10 * exact.average_uncertainty);
}

TEST(Metrics, ExactModeHasCapacityCeiling) {
    const auto prior = PriorDistribution::uniform(16);
    EXPECT_THROW(average_posterior_metrics(prior, kMaxExactDigits + 1), CapacityError);
    MetricOptions options;
    options.mode = MetricMode::sampled;
    options.samples = 10;
    EXPECT_NO_THROW(average_posterior_metrics(prior, kMaxExactDigits + 1, options));
}

TEST(Metrics, BoundFormula) {
    EXPECT_DOUBLE_EQ(average_variance_bound(1), 0.75 * 0.5);
    EXPECT_DOUBLE_EQ(average_variance_bound(4), 0.5 * (1.0 + 1.0 / 16.0) / 16.0);
}
