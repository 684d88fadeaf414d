#pragma once

#include <string>
#include <vector>

namespace qpest {

// Repetition-code error correction: each digit is measured an odd number of
// times and the majority fixes the decoded bit. Strategies differ in how the
// repetition budget is spread over digit significance:
//   none          - one shot per digit
//   repeat-all    - fixed odd count for every digit
//   leading-half  - fixed odd count for the most significant half, one shot
//                   for the rest
//   tiered        - per-fraction repetition tiers ordered from the most
//                   significant digits down; uncovered digits get one shot.
//                   Default tiers: 7 reps for the leading M/8, 5 for the next
//                   M/8, 3 for the next M/4.
class ECStrategy {
  public:
    struct Tier {
        double digit_fraction;  // fraction of the digit count this tier spans
        int repetitions;        // odd, >= 1
    };

    ECStrategy() : ECStrategy(none()) {}

    static ECStrategy none();
    static ECStrategy repeat_all(int repetitions = 3);
    static ECStrategy repeat_leading_half(int repetitions = 3);
    static ECStrategy tiered(std::vector<Tier> tiers);
    static ECStrategy standard_tiered();  // the 7/5/3 ladder

    // Parse CLI names: none | s1 | s1-half | s2.
    static ECStrategy from_name(const std::string& name);

    // Repetitions for the digit of given significance (1 = most significant).
    int repetitions_for_digit(int significance, int digit_count) const;

    // Repetitions used in step j of an M-digit run (step j decodes the digit
    // with significance M+1-j).
    int repetitions_for_step(int step, int digit_count) const {
        return repetitions_for_digit(digit_count + 1 - step, digit_count);
    }

    long total_repetitions(int digit_count) const;

    const std::string& name() const { return name_; }

  private:
    ECStrategy(std::string name, std::vector<Tier> tiers);

    std::string name_;
    std::vector<Tier> tiers_;
};

}  // namespace qpest
