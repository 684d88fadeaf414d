#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpest {

// Binary fraction 0.b_1 b_2 ... b_M with the most significant digit first.
// Digit "significance" l runs 1..M and carries weight 2^-l; the measurement
// protocol acquires digits in reverse (least significant first), so step j
// of an M-digit run determines the digit with significance M+1-j.
//
// The same type represents both eigenvalue digit patterns and decoded
// measurement results.
class DigitString {
  public:
    DigitString() = default;
    explicit DigitString(std::vector<std::uint8_t> bits_msb_first);

    // All-zero string of the given length.
    static DigitString zeros(int digit_count);

    // The digit_count-bit expansion of index / 2^digit_count, index in [0, 2^M).
    static DigitString from_index(std::uint64_t index, int digit_count);

    // Exact dyadic representation of value in [0, 1); throws ArgumentError if
    // value is not representable in digit_count bits.
    static DigitString from_value(double value, int digit_count);

    // Parse e.g. "0.101" or "101".
    static DigitString parse(const std::string& text);

    int digit_count() const { return static_cast<int>(bits_.size()); }

    // Digit by significance l in 1..M (1 = most significant).
    std::uint8_t digit(int significance) const;

    // sum_l b_l 2^-l, in [0, 1 - 2^-M].
    double value() const;

    std::uint64_t index() const;  // value() * 2^M as integer

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    // min(value, 1 - value): results above 1/2 alias their mirror image.
    double folded() const;

    std::string to_string() const;  // "0.101"

    bool operator==(const DigitString&) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace qpest
