#include "qpest/ec_strategy.hpp"

#include <cmath>

#include "qpest/errors.hpp"

namespace qpest {

ECStrategy::ECStrategy(std::string name, std::vector<Tier> tiers)
    : name_(std::move(name)), tiers_(std::move(tiers)) {
    double fraction_sum = 0.0;
    for (const auto& tier : tiers_) {
        if (tier.repetitions < 1 || tier.repetitions % 2 == 0)
            throw ArgumentError("ECStrategy: repetition counts must be odd and >= 1");
        if (!(tier.digit_fraction > 0.0 && tier.digit_fraction <= 1.0))
            throw ArgumentError("ECStrategy: tier fractions must lie in (0, 1]");
        fraction_sum += tier.digit_fraction;
    }
    if (fraction_sum > 1.0 + 1e-12)
        throw ArgumentError("ECStrategy: tier fractions must sum to at most 1");
}

ECStrategy ECStrategy::none() { return ECStrategy("none", {}); }

ECStrategy ECStrategy::repeat_all(int repetitions) {
    return ECStrategy("s1", {{1.0, repetitions}});
}

ECStrategy ECStrategy::repeat_leading_half(int repetitions) {
    return ECStrategy("s1-half", {{0.5, repetitions}});
}

ECStrategy ECStrategy::tiered(std::vector<Tier> tiers) {
    return ECStrategy("s2", std::move(tiers));
}

ECStrategy ECStrategy::standard_tiered() {
    return tiered({{1.0 / 8.0, 7}, {1.0 / 8.0, 5}, {1.0 / 4.0, 3}});
}

ECStrategy ECStrategy::from_name(const std::string& name) {
    if (name == "none") return none();
    if (name == "s1") return repeat_all();
    if (name == "s1-half") return repeat_leading_half();
    if (name == "s2") return standard_tiered();
    throw ArgumentError("ECStrategy: unknown strategy '" + name + "' (expected none|s1|s1-half|s2)");
}

int ECStrategy::repetitions_for_digit(int significance, int digit_count) const {
    if (digit_count < 1) throw ArgumentError("ECStrategy: digit_count must be >= 1");
    if (significance < 1 || significance > digit_count)
        throw ArgumentError("ECStrategy: significance out of range");
    double cumulative = 0.0;
    for (const auto& tier : tiers_) {
        cumulative += tier.digit_fraction;
        // tier boundary rounds up, so small digit counts still get coverage
        const int boundary = static_cast<int>(std::ceil(cumulative * digit_count - 1e-9));
        if (significance <= boundary) return tier.repetitions;
    }
    return 1;
}

long ECStrategy::total_repetitions(int digit_count) const {
    long total = 0;
    for (int l = 1; l <= digit_count; ++l) total += repetitions_for_digit(l, digit_count);
    return total;
}

}  // namespace qpest
