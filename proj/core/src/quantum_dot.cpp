#include "qpest/quantum_dot.hpp"

#include <cmath>
#include <limits>

#include "qpest/errors.hpp"
#include "qpest/metrics.hpp"

namespace qpest {

void QDPreset::validate() const {
    if (!(hyperfine_total > 0.0)) throw ArgumentError("QDPreset: hyperfine coupling must be > 0");
    if (nuclei < 1) throw ArgumentError("QDPreset: nuclei count must be >= 1");
    if (!(polarization >= 0.0 && polarization <= 1.0))
        throw ArgumentError("QDPreset: polarization must lie in [0, 1]");
    if (!(larmor > 0.0)) throw ArgumentError("QDPreset: Larmor frequency must be > 0");
}

QDPreset QDPreset::gaas_large() {
    return QDPreset{"GaAs-large", from_inverse_ns(100.0), 1000000, 0.0, from_inverse_ns(10.0)};
}

QDPreset QDPreset::gaas_small() {
    return QDPreset{"GaAs-small", from_inverse_ns(100.0), 10000, 0.0, from_inverse_ns(10.0)};
}

std::optional<QDPreset> QDPreset::by_name(const std::string& name) {
    if (name == "GaAs-large") return gaas_large();
    if (name == "GaAs-small") return gaas_small();
    return std::nullopt;
}

std::vector<std::string> QDPreset::preset_names() { return {"GaAs-large", "GaAs-small"}; }

QDDerived qd_derived_parameters(const QDPreset& preset) {
    preset.validate();
    QDDerived out;
    const double depol = 1.0 - preset.polarization * preset.polarization;
    out.delta0 = preset.hyperfine_total * std::sqrt(depol / static_cast<double>(preset.nuclei));
    out.correlation_time = preset.larmor * std::pow(static_cast<double>(preset.nuclei), 1.5) /
                           (preset.hyperfine_total * preset.hyperfine_total);
    if (out.delta0 > 0.0) out.t2_star = 1.0 / out.delta0;
    return out;
}

double nuclei_for_delta0(double hyperfine_total, double delta0, double polarization) {
    if (!(hyperfine_total > 0.0) || !(delta0 > 0.0))
        throw ArgumentError("nuclei_for_delta0: rates must be > 0");
    const double depol = 1.0 - polarization * polarization;
    return hyperfine_total * hyperfine_total * depol / (delta0 * delta0);
}

int optimal_digit_count(double delta0, double f, double correlation_time, int max_digits) {
    if (!(delta0 > 0.0) || !(f > 0.0) || !(correlation_time > 0.0))
        throw ArgumentError("optimal_digit_count: parameters must be > 0");
    if (max_digits < 1) throw ArgumentError("optimal_digit_count: max_digits must be >= 1");

    const ScaleMap scale = ScaleMap::from_prior(delta0, f);
    int best_m = 1;
    double best_variance = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= max_digits; ++m) {
        ProtocolConfig config;
        config.digit_count = m;
        config.scale = scale;
        const double t_int = protocol_time(config).interaction;
        const double estimate_var =
            scale.alpha * scale.alpha * average_variance_bound(m);
        const double drift = t_int / correlation_time;
        const double decorrelation =
            delta0 * delta0 * drift * drift * (7.0 / 3.0 - 1.0 / 12.0);
        const double total = estimate_var + decorrelation;
        if (total < best_variance) {
            best_variance = total;
            best_m = m;
        }
    }
    return best_m;
}

int optimal_digit_count(const QDPreset& preset, const ProtocolConfig& base_config, int max_digits) {
    const QDDerived derived = qd_derived_parameters(preset);
    if (!(derived.delta0 > 0.0))
        throw ArgumentError("optimal_digit_count: fully polarized preset has no field spread");
    return optimal_digit_count(derived.delta0, base_config.scale.f, derived.correlation_time,
                               max_digits);
}

}  // namespace qpest
