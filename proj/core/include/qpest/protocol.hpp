#pragma once

#include <cstdint>
#include <vector>

#include "qpest/digit_string.hpp"
#include "qpest/ec_strategy.hpp"
#include "qpest/scale_map.hpp"

namespace qpest {

class RandomStream;

// Full simulation of the adaptive measurement ladder: halving interaction
// times, basis rotations tracking the decoded digits, outcome sampling,
// bit-flip error injection and majority-vote error correction.

struct ProtocolConfig {
    int digit_count = 8;
    ScaleMap scale;             // supplies alpha = 2 f delta0
    double tau_m = 0.0;         // seconds per single measurement
    double error_p = 0.0;       // per-repetition preparation/measurement flip probability
    ECStrategy ec = ECStrategy::none();
    std::uint64_t seed = 0;

    void validate() const;

    // Longest interaction time, used by the first step (least significant
    // digit): t_1 = pi 2^M / (2 f delta0) = pi 2^M / alpha.
    double first_step_time() const;

    // t_j = t_1 2^{1-j}; times halve each step.
    double step_time(int step) const;
};

struct StepRecord {
    int step = 0;                         // j in 1..M
    double interaction_time = 0.0;        // t_j, seconds (single repetition)
    double basis_angle = 0.0;             // phi_j, radians
    int repetitions = 1;
    std::vector<std::uint8_t> raw_outcomes;
    std::uint8_t decoded_bit = 0;         // majority; digit significance M+1-j
};

struct Transcript {
    std::vector<StepRecord> steps;        // measurement order
    DigitString decoded;                  // assembled result R
    double interaction_time = 0.0;        // sum over steps of t_j * repetitions
    double measurement_time = 0.0;        // tau_m * total repetitions
    double total_time() const { return interaction_time + measurement_time; }
};

// Noise-free run for an exactly representable eigenvalue; every step
// probability is 0 or 1, so the decode is deterministic and exact.
// Throws ArgumentError if the config carries error_p > 0.
Transcript run_ideal(const DigitString& eigenvalue_digits, const ProtocolConfig& config);

// Stochastic run: per repetition the outcome is sampled from the step model
// and flipped with probability error_p; the majority over repetitions fixes
// the decoded bit, which feeds the next basis angle.
Transcript run_noisy(double s, const ProtocolConfig& config, RandomStream& rng);

struct ProtocolTime {
    double interaction = 0.0;  // seconds, EC repetitions included
    double total = 0.0;        // interaction + tau_m per repetition
    long measurements = 0;     // total repetition count
};

ProtocolTime protocol_time(const ProtocolConfig& config);

// Accuracy ceiling in units of delta0 for a given interaction-time budget:
// sqrt(pi f / (delta0 T_int)).
double uncertainty_vs_time_bound(const ProtocolConfig& config);
double uncertainty_vs_time_bound(double f, double delta0, double interaction_time);

}  // namespace qpest
