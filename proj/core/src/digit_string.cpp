#include "qpest/digit_string.hpp"

#include <cmath>

#include "qpest/errors.hpp"

namespace qpest {

DigitString::DigitString(std::vector<std::uint8_t> bits_msb_first) : bits_(std::move(bits_msb_first)) {
    if (bits_.empty()) throw ArgumentError("DigitString: need at least one digit");
    for (auto b : bits_)
        if (b > 1) throw ArgumentError("DigitString: digits must be 0 or 1");
}

DigitString DigitString::zeros(int digit_count) {
    if (digit_count < 1) throw ArgumentError("DigitString: digit_count must be >= 1");
    return DigitString(std::vector<std::uint8_t>(digit_count, 0));
}

DigitString DigitString::from_index(std::uint64_t index, int digit_count) {
    if (digit_count < 1 || digit_count > 62)
        throw ArgumentError("DigitString: digit_count out of range");
    if (index >= (std::uint64_t{1} << digit_count))
        throw ArgumentError("DigitString: index exceeds 2^digit_count");
    std::vector<std::uint8_t> bits(digit_count);
    for (int l = 1; l <= digit_count; ++l)
        bits[l - 1] = static_cast<std::uint8_t>((index >> (digit_count - l)) & 1u);
    return DigitString(std::move(bits));
}

DigitString DigitString::from_value(double value, int digit_count) {
    if (digit_count < 1 || digit_count > 62)
        throw ArgumentError("DigitString: digit_count out of range");
    if (!(value >= 0.0 && value < 1.0))
        throw ArgumentError("DigitString: value must lie in [0, 1)");
    const double scaled = std::ldexp(value, digit_count);
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-9)
        throw ArgumentError("DigitString: value has no exact " + std::to_string(digit_count) +
                            "-digit expansion");
    return from_index(static_cast<std::uint64_t>(rounded), digit_count);
}

DigitString DigitString::parse(const std::string& text) {
    std::string t = text;
    if (t.rfind("0.", 0) == 0) t = t.substr(2);
    if (t.empty()) throw ArgumentError("DigitString: empty digit text");
    std::vector<std::uint8_t> bits;
    bits.reserve(t.size());
    for (char c : t) {
        if (c != '0' && c != '1') throw ArgumentError("DigitString: invalid digit character");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return DigitString(std::move(bits));
}

std::uint8_t DigitString::digit(int significance) const {
    if (significance < 1 || significance > digit_count())
        throw ArgumentError("DigitString: significance out of range");
    return bits_[significance - 1];
}

double DigitString::value() const {
    // Exact: dyadic rationals with <= 62 bits are representable in a double.
    return std::ldexp(static_cast<double>(index()), -digit_count());
}

std::uint64_t DigitString::index() const {
    std::uint64_t idx = 0;
    for (auto b : bits_) idx = (idx << 1) | b;
    return idx;
}

double DigitString::folded() const {
    const double v = value();
    return std::min(v, 1.0 - v);
}

std::string DigitString::to_string() const {
    std::string out = "0.";
    for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
}

}  // namespace qpest
