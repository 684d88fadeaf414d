#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpest/protocol.hpp"

namespace qpest {

// Quantum-dot parameter presets and the derived quantities that feed the
// protocol: prior field spread delta0, dephasing time T2* = 1/delta0 and the
// field correlation time t_c from electron-mediated nuclear spin exchange.
//
// Rates are stored internally as angular frequencies in rad/s. Inputs quoted
// in 1/ns (the conventional unit for hyperfine couplings) convert via
// from_inverse_ns: x [1/ns] -> x * 1e9 [rad/s].

constexpr double from_inverse_ns(double rate) { return rate * 1e9; }
constexpr double to_inverse_ns(double rate) { return rate * 1e-9; }

struct QDPreset {
    std::string name;
    double hyperfine_total = 0.0;  // A, rad/s
    long nuclei = 0;               // N
    double polarization = 0.0;     // P in [0, 1]
    double larmor = 0.0;           // epsilon_z, rad/s

    void validate() const;

    static QDPreset gaas_large();  // A = 100/ns, N = 1e6
    static QDPreset gaas_small();  // A = 100/ns, N = 1e4
    static std::optional<QDPreset> by_name(const std::string& name);
    static std::vector<std::string> preset_names();
};

struct QDDerived {
    double delta0 = 0.0;                 // A sqrt((1-P^2)/N), rad/s
    double correlation_time = 0.0;       // epsilon_z N^{3/2} / A^2, seconds
    std::optional<double> t2_star;       // 1/delta0; absent at full polarization
};

QDDerived qd_derived_parameters(const QDPreset& preset);

// Invert delta0(A, N, P) for N.
double nuclei_for_delta0(double hyperfine_total, double delta0, double polarization);

// Digit count minimizing predicted total variance: the enumeration bound
// alpha^2 (1+2^-M)/2 2^-M for the estimate plus the leading-order
// decorrelation penalty (9/4) delta0^2 (T_int/t_c)^2 accrued over the
// interaction time.
int optimal_digit_count(const QDPreset& preset, const ProtocolConfig& base_config,
                        int max_digits = 24);
int optimal_digit_count(double delta0, double f, double correlation_time, int max_digits = 24);

}  // namespace qpest
