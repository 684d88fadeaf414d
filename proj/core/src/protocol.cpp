#include "qpest/protocol.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpest/errors.hpp"
#include "qpest/likelihood.hpp"
#include "qpest/rng.hpp"

namespace qpest {

namespace {
constexpr double kPi = std::numbers::pi;
}

void ProtocolConfig::validate() const {
    if (digit_count < 1 || digit_count > 48)
        throw ArgumentError("ProtocolConfig: digit_count must lie in [1, 48]");
    scale.validate();
    if (tau_m < 0.0) throw ArgumentError("ProtocolConfig: tau_m must be >= 0");
    if (!(error_p >= 0.0 && error_p <= 1.0))
        throw ArgumentError("ProtocolConfig: error_p must lie in [0, 1]");
}

double ProtocolConfig::first_step_time() const {
    return kPi * std::ldexp(1.0, digit_count) / scale.alpha;
}

double ProtocolConfig::step_time(int step) const {
    if (step < 1 || step > digit_count)
        throw ArgumentError("ProtocolConfig: step out of range");
    return std::ldexp(first_step_time(), 1 - step);
}

namespace {

Transcript run_protocol(double s, const ProtocolConfig& config, RandomStream* rng) {
    const int m = config.digit_count;
    Transcript transcript;
    transcript.steps.reserve(m);

    std::vector<std::uint8_t> history;  // decoded bits, measurement order
    history.reserve(m);
    for (int j = 1; j <= m; ++j) {
        StepRecord record;
        record.step = j;
        record.interaction_time = config.step_time(j);
        record.basis_angle = basis_angle(j, history);
        record.repetitions = config.ec.repetitions_for_step(j, m);
        record.raw_outcomes.reserve(record.repetitions);

        const double p_one = step_outcome_probability(s, m, j, history, 1);
        int ones = 0;
        for (int rep = 0; rep < record.repetitions; ++rep) {
            std::uint8_t bit;
            if (rng == nullptr) {
                // deterministic path: probability must be 0 or 1
                if (p_one > 1e-6 && p_one < 1.0 - 1e-6)
                    throw ArgumentError("run_ideal: eigenvalue is not exactly representable (step " +
                                        std::to_string(j) + " probability " + std::to_string(p_one) + ")");
                bit = p_one > 0.5 ? 1 : 0;
            } else {
                bit = rng->bernoulli(p_one) ? 1 : 0;
                if (config.error_p > 0.0 && rng->bernoulli(config.error_p)) bit ^= 1;
            }
            record.raw_outcomes.push_back(bit);
            ones += bit;
        }
        record.decoded_bit = (2 * ones > record.repetitions) ? 1 : 0;
        history.push_back(record.decoded_bit);

        transcript.interaction_time += record.interaction_time * record.repetitions;
        transcript.measurement_time += config.tau_m * record.repetitions;
        transcript.steps.push_back(std::move(record));
    }

    // history is least significant first; the digit string wants MSB first
    std::vector<std::uint8_t> bits(history.rbegin(), history.rend());
    transcript.decoded = DigitString(std::move(bits));
    return transcript;
}

}  // namespace

Transcript run_ideal(const DigitString& eigenvalue_digits, const ProtocolConfig& config) {
    config.validate();
    if (config.error_p != 0.0)
        throw ArgumentError("run_ideal: requires error_p == 0 (got nonzero error rate)");
    if (eigenvalue_digits.digit_count() != config.digit_count)
        throw ArgumentError("run_ideal: digit string length must match config.digit_count");
    return run_protocol(eigenvalue_digits.value(), config, nullptr);
}

Transcript run_noisy(double s, const ProtocolConfig& config, RandomStream& rng) {
    config.validate();
    if (!(s >= 0.0 && s <= 0.5))
        throw ArgumentError("run_noisy: s must lie in [0, 1/2]");
    return run_protocol(s, config, &rng);
}

ProtocolTime protocol_time(const ProtocolConfig& config) {
    config.validate();
    ProtocolTime time;
    // accumulate the dimensionless ladder weights first: they are small dyadic
    // rationals, so the geometric-sum identity 2(1 - 2^-M) holds bit-exactly
    double weight = 0.0;
    for (int j = 1; j <= config.digit_count; ++j) {
        const int reps = config.ec.repetitions_for_step(j, config.digit_count);
        weight += reps * std::ldexp(1.0, 1 - j);
        time.measurements += reps;
    }
    time.interaction = config.first_step_time() * weight;
    time.total = time.interaction + config.tau_m * static_cast<double>(time.measurements);
    return time;
}

double uncertainty_vs_time_bound(double f, double delta0, double interaction_time) {
    if (!(interaction_time > 0.0))
        throw ArgumentError("uncertainty_vs_time_bound: interaction time must be positive");
    return std::sqrt(kPi * f / (delta0 * interaction_time));
}

double uncertainty_vs_time_bound(const ProtocolConfig& config) {
    const ProtocolTime time = protocol_time(config);
    return uncertainty_vs_time_bound(config.scale.f, config.scale.delta0, time.interaction);
}

}  // namespace qpest
