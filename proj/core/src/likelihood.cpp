#include "qpest/likelihood.hpp"

#include <cmath>
#include <numbers>

#include "qpest/errors.hpp"

namespace qpest {

namespace {
constexpr double kPi = std::numbers::pi;
// Below this |sin(pi delta)| the closed form loses all precision to
// cancellation; fall back to the product form, which is exact there.
constexpr double kSingularSine = 1e-9;
}  // namespace

double likelihood_product(double s, const DigitString& result) {
    if (!(s >= 0.0 && s <= 1.0)) throw ArgumentError("likelihood_product: s must lie in [0, 1]");
    const double delta = s - result.value();
    double prob = 1.0;
    double scale = 1.0;  // 2^k
    for (int k = 0; k < result.digit_count(); ++k) {
        const double c = std::cos(kPi * delta * scale);
        prob *= c * c;
        scale *= 2.0;
    }
    return prob;
}

double likelihood_closed_form(double s, const DigitString& result) {
    if (!(s >= 0.0 && s <= 1.0)) throw ArgumentError("likelihood_closed_form: s must lie in [0, 1]");
    const int m = result.digit_count();
    const double delta = s - result.value();
    const double denom_sine = std::sin(kPi * delta);
    if (std::abs(denom_sine) < kSingularSine) {
        // sin(2^M x) / (2^M sin x) -> +-1 as x -> n pi; exact limit is 1 after
        // squaring. Slightly off the singularity the product form stays stable.
        if (delta == std::round(delta)) return 1.0;
        return likelihood_product(s, result);
    }
    const double ratio = std::sin(std::ldexp(kPi * delta, m)) / std::ldexp(denom_sine, m);
    return ratio * ratio;
}

double basis_angle(int step, std::span<const std::uint8_t> history) {
    if (step < 1) throw ArgumentError("basis_angle: step must be >= 1");
    if (static_cast<int>(history.size()) != step - 1)
        throw ArgumentError("basis_angle: history must hold step-1 bits");
    double angle = 0.0;
    for (int l = 1; l <= step - 1; ++l)
        angle += static_cast<double>(history[l - 1]) * std::ldexp(1.0, l - step);
    return 0.5 * kPi * angle;
}

double step_outcome_probability(double s, int digit_count, int step,
                                std::span<const std::uint8_t> history, int outcome) {
    if (step < 1 || step > digit_count)
        throw ArgumentError("step_outcome_probability: step must lie in [1, digit_count]");
    if (outcome != 0 && outcome != 1)
        throw ArgumentError("step_outcome_probability: outcome must be 0 or 1");
    const double phi = basis_angle(step, history);
    const double phase = kPi * s * std::ldexp(1.0, digit_count - step);
    const double c = std::cos(phase - phi - 0.5 * kPi * static_cast<double>(outcome));
    return c * c;
}

double folded_result(const DigitString& result) { return result.folded(); }

}  // namespace qpest
