#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qpest/errors.hpp"
#include "qpest/likelihood.hpp"
#include "qpest/protocol.hpp"
#include "qpest/rng.hpp"

using namespace qpest;

namespace {

ProtocolConfig make_config(int digits, double error_p = 0.0) {
    ProtocolConfig config;
    config.digit_count = digits;
    config.scale = ScaleMap::from_prior(1e8, 1.0);  // 1/delta0 = 10 ns
    config.tau_m = 1e-6;
    config.error_p = error_p;
    config.seed = 1234;
    return config;
}

}  // namespace

TEST(ECStrategy, RepetitionLayout) {
    const auto s2 = ECStrategy::standard_tiered();
    // M = 16: leading 2 digits at 7, next 2 at 5, next 4 at 3, trailing 8 unprotected
    EXPECT_EQ(s2.repetitions_for_digit(1, 16), 7);
    EXPECT_EQ(s2.repetitions_for_digit(2, 16), 7);
    EXPECT_EQ(s2.repetitions_for_digit(3, 16), 5);
    EXPECT_EQ(s2.repetitions_for_digit(4, 16), 5);
    EXPECT_EQ(s2.repetitions_for_digit(5, 16), 3);
    EXPECT_EQ(s2.repetitions_for_digit(8, 16), 3);
    EXPECT_EQ(s2.repetitions_for_digit(9, 16), 1);
    EXPECT_EQ(s2.repetitions_for_digit(16, 16), 1);
    // step indexing is reversed significance
    EXPECT_EQ(s2.repetitions_for_step(16, 16), 7);
    EXPECT_EQ(s2.repetitions_for_step(1, 16), 1);

    const auto half = ECStrategy::repeat_leading_half();
    EXPECT_EQ(half.repetitions_for_digit(4, 8), 3);
    EXPECT_EQ(half.repetitions_for_digit(5, 8), 1);
}

TEST(ECStrategy, RejectsEvenRepetitions) {
    EXPECT_THROW(ECStrategy::repeat_all(2), ArgumentError);
    EXPECT_THROW(ECStrategy::tiered({{0.5, 4}}), ArgumentError);
    EXPECT_THROW(ECStrategy::tiered({{0.7, 3}, {0.7, 3}}), ArgumentError);
}

TEST(RunIdeal, RecoversDigitsExactly) {
    auto config = make_config(3);
    const auto s = DigitString::parse("0.101");
    const auto transcript = run_ideal(s, config);
    EXPECT_EQ(transcript.decoded, s);

    const auto zeros = DigitString::zeros(3);
    EXPECT_EQ(run_ideal(zeros, config).decoded, zeros);
}

TEST(RunIdeal, ExhaustiveDyadicRecovery) {
    for (int m = 1; m <= 8; ++m) {
        auto config = make_config(m);
        for (std::uint64_t idx = 0; idx < (1ull << m); ++idx) {
            const auto s = DigitString::from_index(idx, m);
            const auto transcript = run_ideal(s, config);
            ASSERT_EQ(transcript.decoded, s) << "M=" << m << " idx=" << idx;
        }
    }
}

TEST(RunIdeal, RequiresZeroErrorRate) {
    auto config = make_config(3, 0.01);
    EXPECT_THROW(run_ideal(DigitString::parse("0.101"), config), ArgumentError);
}

TEST(RunNoisy, MatchesIdealForDyadicEigenvalues) {
    auto config = make_config(6);
    RandomStream rng(9);
    for (std::uint64_t idx : {0ull, 13ull, 31ull, 32ull}) {  // s <= 1/2
        const auto s = DigitString::from_index(idx, 6);
        EXPECT_EQ(run_noisy(s.value(), config, rng).decoded, s);
    }
}

TEST(RunNoisy, FullyDepolarizedIsUniform) {
    auto config = make_config(4, 0.5);
    RandomStream rng(2024);
    const int runs = 20000;
    std::vector<long> ones(4, 0);
    for (int n = 0; n < runs; ++n) {
        const auto transcript = run_noisy(0.3, config, rng);
        for (int l = 1; l <= 4; ++l) ones[l - 1] += transcript.decoded.digit(l);
    }
    for (int l = 0; l < 4; ++l)
        EXPECT_NEAR(static_cast<double>(ones[l]) / runs, 0.5, 0.015) << "digit " << l + 1;
}

TEST(RunNoisy, EmpiricalDistributionMatchesLikelihood) {
    // chi-square of decoded results against the conditional likelihood
    auto config = make_config(4);
    RandomStream rng(31415);
    const double s = 0.2137;
    const int runs = 50000;
    std::vector<long> counts(16, 0);
    for (int n = 0; n < runs; ++n) ++counts[run_noisy(s, config, rng).decoded.index()];
    double chi2 = 0.0;
    for (std::uint64_t r = 0; r < 16; ++r) {
        const double expected = runs * likelihood_product(s, DigitString::from_index(r, 4));
        if (expected < 1e-9) {
            EXPECT_EQ(counts[r], 0);
            continue;
        }
        const double diff = counts[r] - expected;
        chi2 += diff * diff / expected;
    }
    // 15 dof; 3-sigma-ish ceiling
    EXPECT_LT(chi2, 40.0);
}

TEST(RunNoisy, TranscriptIsInternallyConsistent) {
    auto config = make_config(8, 0.05);
    config.ec = ECStrategy::standard_tiered();
    RandomStream rng(55);
    const auto transcript = run_noisy(0.217, config, rng);

    std::vector<std::uint8_t> history;
    double interaction = 0.0;
    long measurements = 0;
    for (const auto& record : transcript.steps) {
        EXPECT_DOUBLE_EQ(record.basis_angle, basis_angle(record.step, history));
        EXPECT_EQ(record.raw_outcomes.size(), static_cast<std::size_t>(record.repetitions));
        history.push_back(record.decoded_bit);
        interaction += record.interaction_time * record.repetitions;
        measurements += record.repetitions;
    }
    EXPECT_DOUBLE_EQ(transcript.interaction_time, interaction);
    EXPECT_DOUBLE_EQ(transcript.measurement_time, config.tau_m * measurements);
    // decoded digits are the reversed step history
    for (int j = 1; j <= 8; ++j)
        EXPECT_EQ(transcript.decoded.digit(8 + 1 - j), transcript.steps[j - 1].decoded_bit);
}

TEST(ProtocolTime, GeometricSumIdentity) {
    for (int m : {1, 4, 8, 16, 20}) {
        auto config = make_config(m);
        const auto time = protocol_time(config);
        const double t1 = config.first_step_time();
        // t_1 = pi 2^M / (2 f delta0) for a prior-derived scale
        EXPECT_DOUBLE_EQ(t1, std::numbers::pi * std::ldexp(1.0, m) /
                                 (2.0 * config.scale.f * config.scale.delta0));
        EXPECT_DOUBLE_EQ(time.interaction, 2.0 * t1 * (1.0 - std::ldexp(1.0, -m))) << "M=" << m;
        EXPECT_EQ(time.measurements, m);
        EXPECT_DOUBLE_EQ(time.total, time.interaction + config.tau_m * m);
    }
}

TEST(ProtocolTime, SingleStep) {
    auto config = make_config(1);
    const auto time = protocol_time(config);
    EXPECT_DOUBLE_EQ(time.interaction, config.first_step_time());
    EXPECT_DOUBLE_EQ(time.total, config.first_step_time() + config.tau_m);
}

TEST(ProtocolTime, WorkedExampleEightDigits) {
    // tau_m = 1 us, 1/delta0 = 10 ns, f = 1: total comes out at 16 us
    auto config = make_config(8);
    const auto time = protocol_time(config);
    EXPECT_NEAR(time.total, 16e-6, 0.05 * 16e-6);
    EXPECT_NEAR(time.interaction, 8.01e-6, 0.05e-6);
}

TEST(ProtocolTime, RepeatAllTriplesBudget) {
    auto plain = make_config(8);
    auto corrected = make_config(8);
    corrected.ec = ECStrategy::repeat_all(3);
    const auto t0 = protocol_time(plain);
    const auto t3 = protocol_time(corrected);
    EXPECT_NEAR(t3.interaction, 3.0 * t0.interaction, 1e-12 * t0.interaction);
    EXPECT_EQ(t3.measurements, 3 * t0.measurements);
}

TEST(TimeBound, ScalesAsSqrtHalving) {
    auto config = make_config(13);
    const double bound = uncertainty_vs_time_bound(config);
    // T_int = (pi/(f delta0)) 2^M (1 - 2^-M) makes the bound f/sqrt(2^M - 1)
    EXPECT_NEAR(bound, 1.0 / std::sqrt(std::ldexp(1.0, 13) - 1.0), 1e-12);
    EXPECT_LT(uncertainty_vs_time_bound(1.0, 1e8, 1.0),
              uncertainty_vs_time_bound(1.0, 1e8, 1e-3));
}
