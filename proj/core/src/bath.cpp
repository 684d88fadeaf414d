#include "qpest/bath.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qpest/errors.hpp"

namespace qpest {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Simpson rule; integrands here are smooth C^inf autocorrelations.
template <typename F>
double simpson(F&& f, double a, double b, int panels = 512) {
    if (b <= a) return 0.0;
    const double h = (b - a) / (2.0 * panels);
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < 2 * panels; i += 2) odd += f(a + i * h);
    for (int i = 2; i < 2 * panels; i += 2) even += f(a + i * h);
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace

GaussianSpectrum::GaussianSpectrum(double field_variance, double correlation_time)
    : field_variance_(field_variance), correlation_time_(correlation_time) {
    if (field_variance < 0.0) throw ArgumentError("GaussianSpectrum: variance must be >= 0");
    if (!(correlation_time > 0.0))
        throw ArgumentError("GaussianSpectrum: correlation time must be > 0");
}

double GaussianSpectrum::density(double omega) const {
    const double corner = 1.0 / correlation_time_;
    const double u = omega / corner;
    return field_variance_ / (std::sqrt(kTwoPi) * corner) * std::exp(-0.5 * u * u);
}

double GaussianSpectrum::autocorrelation(double tau) const {
    const double u = tau / correlation_time_;
    return field_variance_ * std::exp(-0.5 * u * u);
}

BathProcess BathProcess::gaussian(double delta0, double correlation_time) {
    if (delta0 < 0.0) throw ArgumentError("BathProcess: delta0 must be >= 0");
    return BathProcess{std::make_shared<GaussianSpectrum>(delta0 * delta0, correlation_time)};
}

double Trajectory::at(double t) const {
    if (samples.empty()) throw RangeError("Trajectory: empty");
    if (t < -1e-12 * dt || t > duration() + 1e-12 * dt)
        throw RangeError("Trajectory: time outside sampled range");
    const double x = std::clamp(t / dt, 0.0, static_cast<double>(samples.size() - 1));
    const auto i = static_cast<std::size_t>(x);
    if (i + 1 >= samples.size()) return samples.back();
    const double frac = x - static_cast<double>(i);
    return samples[i] * (1.0 - frac) + samples[i + 1] * frac;
}

double Trajectory::window_average(double t0, double t1) const {
    if (!(t1 > t0)) throw RangeError("Trajectory: window must have positive length");
    if (t0 < -1e-12 * dt || t1 > duration() + 1e-12 * dt)
        throw RangeError("Trajectory: window outside sampled range");
    // trapezoid on the sample grid plus partial end cells
    const double lo = std::max(t0, 0.0), hi = std::min(t1, duration());
    const auto first = static_cast<std::size_t>(std::ceil(lo / dt - 1e-12));
    const auto last = static_cast<std::size_t>(std::floor(hi / dt + 1e-12));
    double integral = 0.0;
    if (first > last) {
        integral = (hi - lo) * 0.5 * (at(lo) + at(hi));
    } else {
        for (std::size_t i = first; i + 1 <= last; ++i)
            integral += 0.5 * (samples[i] + samples[i + 1]) * dt;
        const double t_first = static_cast<double>(first) * dt;
        const double t_last = static_cast<double>(last) * dt;
        if (lo < t_first) integral += (t_first - lo) * 0.5 * (at(lo) + samples[first]);
        if (hi > t_last) integral += (hi - t_last) * 0.5 * (samples[last] + at(hi));
    }
    return integral / (t1 - t0);
}

Trajectory sample_trajectory(const BathProcess& process, double duration, double dt,
                             RandomStream& rng, int modes) {
    if (!(dt > 0.0) || !(duration >= dt))
        throw ArgumentError("sample_trajectory: need duration >= dt > 0");
    if (modes < 1) throw ArgumentError("sample_trajectory: modes must be >= 1");

    Trajectory trajectory;
    trajectory.dt = dt;
    trajectory.resolution_warning = dt > process.correlation_time() / 10.0;
    const auto count = static_cast<std::size_t>(std::ceil(duration / dt)) + 1;
    trajectory.samples.assign(count, 0.0);
    if (process.variance() <= 0.0) return trajectory;

    const double band = process.spectrum->synthesis_band_edge();
    const double dw = band / static_cast<double>(modes);
    std::vector<double> amplitude(modes), frequency(modes), phase(modes);
    for (int m = 0; m < modes; ++m) {
        frequency[m] = (static_cast<double>(m) + 0.5) * dw;
        // one-sided density is 2 S(w); harmonic amplitude sqrt(2 * 2 S dw)
        amplitude[m] = 2.0 * std::sqrt(process.spectrum->density(frequency[m]) * dw);
        phase[m] = kTwoPi * rng.uniform();
    }
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) * dt;
        double value = 0.0;
        for (int m = 0; m < modes; ++m)
            value += amplitude[m] * std::cos(frequency[m] * t + phase[m]);
        trajectory.samples[i] = value;
    }
    return trajectory;
}

double measurement_record(const Trajectory& trajectory, double window, double end_time,
                          double noise_variance, RandomStream& rng) {
    if (!(window > 0.0)) throw ArgumentError("measurement_record: window must be > 0");
    if (noise_variance < 0.0) throw ArgumentError("measurement_record: noise variance must be >= 0");
    if (end_time - window < -1e-12 * trajectory.dt)
        throw RangeError("measurement_record: window starts before the trajectory");
    const double mean = trajectory.window_average(end_time - window, end_time);
    const double noise = noise_variance > 0.0 ? std::sqrt(noise_variance) * rng.gaussian() : 0.0;
    return mean + noise;
}

double window_covariance(const BathProcess& process, double a1, double b1, double a2, double b2) {
    if (!(b1 > a1) || !(b2 > a2)) throw ArgumentError("window_covariance: empty window");
    // reduce the double integral of C(u - v) to one dimension against the
    // overlap length of the shifted windows; the overlap is piecewise linear,
    // so integrate each smooth piece separately
    const auto& spectrum = *process.spectrum;
    auto integrand = [&](double w) {
        const double overlap = std::min(b1, b2 + w) - std::max(a1, a2 + w);
        return overlap > 0.0 ? spectrum.autocorrelation(w) * overlap : 0.0;
    };
    std::array<double, 4> knots{a1 - b2, a1 - a2, b1 - b2, b1 - a2};
    std::sort(knots.begin(), knots.end());
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        integral += simpson(integrand, knots[i], knots[i + 1], 512);
    return integral;
}

VarianceBudget decorrelation_variance_expansion(const BathProcess& process, double window,
                                                double est_variance) {
    if (!(window > 0.0)) throw ArgumentError("decorrelation_variance_expansion: window must be > 0");
    if (est_variance < 0.0)
        throw ArgumentError("decorrelation_variance_expansion: est_variance must be >= 0");
    const double t_c = process.correlation_time();
    if (window > t_c / 10.0)
        throw RegimeViolationError(
            "decorrelation_variance_expansion: window exceeds t_c/10; use the quadrature form");
    VarianceBudget budget;
    budget.measurement_noise = est_variance;
    const double ratio = window / t_c;
    budget.decorrelation = process.variance() * ratio * ratio * (7.0 / 3.0 - 1.0 / 12.0);
    budget.total = budget.measurement_noise + budget.decorrelation;
    return budget;
}

VarianceBudget decorrelation_variance(const BathProcess& process, double window,
                                      double est_variance, double lag) {
    if (!(window > 0.0)) throw ArgumentError("decorrelation_variance: window must be > 0");
    if (est_variance < 0.0) throw ArgumentError("decorrelation_variance: est_variance must be >= 0");
    if (lag < 0.0) throw ArgumentError("decorrelation_variance: lag must be >= 0");

    VarianceBudget budget;
    budget.measurement_noise = est_variance;
    if (process.variance() <= 0.0) {
        budget.total = est_variance;
        return budget;
    }
    // <(avg - A(lag))^2> = Var + (1/T^2) iint C - (2/T) int_lag^{lag+T} C
    // with the record window mapped to [-T, 0] and the field probed at +lag.
    const auto& spectrum = *process.spectrum;
    const double double_window = window_covariance(process, 0.0, window, 0.0, window);
    const double cross = simpson([&](double u) { return spectrum.autocorrelation(u); },
                                 lag, lag + window, 1024);
    budget.decorrelation = process.variance() + double_window / (window * window) -
                           2.0 * cross / window;
    budget.total = budget.measurement_noise + budget.decorrelation;
    return budget;
}

double decorrelation_variance_sampled(const BathProcess& process, double window,
                                      double est_variance, double lag, long realizations,
                                      RandomStream& rng) {
    if (realizations < 1)
        throw ArgumentError("decorrelation_variance_sampled: realizations must be >= 1");
    // the synthesized field is band-limited to ~8/t_c, so the grid only needs
    // to resolve the process, not the averaging window
    const double dt = std::min(window / 16.0, process.correlation_time() / 100.0);
    const double duration = window + lag + 2.0 * dt;
    double sum_sq = 0.0;
    for (long n = 0; n < realizations; ++n) {
        const Trajectory trajectory = sample_trajectory(process, duration, dt, rng);
        const double record = measurement_record(trajectory, window, window, est_variance, rng);
        const double later = trajectory.at(window + lag);
        const double diff = record - later;
        sum_sq += diff * diff;
    }
    return sum_sq / static_cast<double>(realizations);
}

namespace {

// <(X - tau m_k)^2> with X the rotation-window field integral and m_k the
// noisy record; expands into window covariances.
double angle_error_second_moment(const BathProcess& process, double window, double est_variance,
                                 double lag, double rotation_time) {
    const double a_r = lag - rotation_time, b_r = lag;  // rotation window
    const double a_m = -window, b_m = 0.0;              // record window
    const double xx = window_covariance(process, a_r, b_r, a_r, b_r);
    const double xm = window_covariance(process, a_r, b_r, a_m, b_m);
    const double mm = window_covariance(process, a_m, b_m, a_m, b_m);
    const double scale = rotation_time / window;
    return xx - 2.0 * scale * xm + scale * scale * mm +
           rotation_time * rotation_time * est_variance;
}

}  // namespace

double rotation_fidelity(const BathProcess& process, double window, double est_variance,
                         double lag, double rotation_time) {
    if (!(rotation_time > 0.0)) throw ArgumentError("rotation_fidelity: rotation time must be > 0");
    if (!(window > 0.0)) throw ArgumentError("rotation_fidelity: window must be > 0");
    if (est_variance < 0.0) throw ArgumentError("rotation_fidelity: est_variance must be >= 0");
    const double second_moment =
        angle_error_second_moment(process, window, est_variance, lag, rotation_time);
    return std::exp(-second_moment / 4.0);
}

double rotation_fidelity_sampled(const BathProcess& process, double window, double est_variance,
                                 double lag, double rotation_time, long realizations,
                                 RandomStream& rng) {
    if (realizations < 1) throw ArgumentError("rotation_fidelity_sampled: realizations must be >= 1");
    // trajectory-local time: record window sits at [0, window]
    const double start = std::min(0.0, window + lag - rotation_time);
    const double stop = window + lag;
    const double dt = std::min(window / 16.0, process.correlation_time() / 200.0);
    const double duration = stop - start + 2.0 * dt;
    double sum_sq = 0.0;
    for (long n = 0; n < realizations; ++n) {
        const Trajectory trajectory = sample_trajectory(process, duration, dt, rng);
        const double shift = -start;  // map physical t to trajectory time
        const double record =
            measurement_record(trajectory, window, window + shift, est_variance, rng);
        const double integral =
            trajectory.window_average(window + lag - rotation_time + shift, window + lag + shift) *
            rotation_time;
        const double err = integral - record * rotation_time;
        sum_sq += err * err;
    }
    return std::exp(-sum_sq / static_cast<double>(realizations) / 4.0);
}

}  // namespace qpest
