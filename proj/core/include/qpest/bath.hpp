#pragma once

#include <memory>
#include <vector>

#include "qpest/rng.hpp"

namespace qpest {

// Stationary zero-mean Gaussian model of the slowly fluctuating field. The
// spectral function fixes everything: variance, autocorrelation, and the
// correlation time defined through the second spectral moment
// 1/t_c^2 = (1/variance) int S(w) w^2 dw.

class Spectrum {
  public:
    virtual ~Spectrum() = default;
    virtual double density(double omega) const = 0;          // two-sided S(w), (rad/s)^2 per rad/s
    virtual double variance() const = 0;                     // int S dw
    virtual double autocorrelation(double tau) const = 0;    // int S e^{i w tau} dw
    virtual double correlation_time() const = 0;
    virtual double synthesis_band_edge() const = 0;          // highest w worth sampling
};

// Default shape: Gaussian density with corner width sigma_w = 1/t_c, so all
// spectral moments converge (a Lorentzian would have a divergent second
// moment and no finite t_c).
class GaussianSpectrum final : public Spectrum {
  public:
    GaussianSpectrum(double field_variance, double correlation_time);

    double density(double omega) const override;
    double variance() const override { return field_variance_; }
    double autocorrelation(double tau) const override;
    double correlation_time() const override { return correlation_time_; }
    double synthesis_band_edge() const override { return 8.0 / correlation_time_; }

  private:
    double field_variance_;     // delta0^2
    double correlation_time_;   // t_c = 1/sigma_w
};

struct BathProcess {
    std::shared_ptr<const Spectrum> spectrum;

    static BathProcess gaussian(double delta0, double correlation_time);

    double variance() const { return spectrum->variance(); }
    double correlation_time() const { return spectrum->correlation_time(); }
    double autocorrelation(double tau) const { return spectrum->autocorrelation(tau); }
};

// One realization of the field on a uniform time grid, synthesized as a
// random-phase harmonic superposition matching the spectrum.
struct Trajectory {
    double dt = 0.0;
    std::vector<double> samples;
    bool resolution_warning = false;  // dt coarser than t_c / 10

    double duration() const { return dt * static_cast<double>(samples.size() - 1); }
    double at(double t) const;                       // linear interpolation
    double window_average(double t0, double t1) const;
};

Trajectory sample_trajectory(const BathProcess& process, double duration, double dt,
                             RandomStream& rng, int modes = 512);

// Windowed time average over [end_time - window, end_time] plus Gaussian
// readout noise of the given variance.
double measurement_record(const Trajectory& trajectory, double window, double end_time,
                          double noise_variance, RandomStream& rng);

struct VarianceBudget {
    double total = 0.0;
    double measurement_noise = 0.0;  // Delta A_est^2 contribution
    double decorrelation = 0.0;      // bath-drift contribution
};

// Leading-order expansion at lag = window, valid for window << t_c:
// total = est_variance + variance (window/t_c)^2 (7/3 - 1/12).
// Throws RegimeViolationError when window > t_c / 10.
VarianceBudget decorrelation_variance_expansion(const BathProcess& process, double window,
                                                double est_variance);

// Exact second-moment budget of (record - field(lag after record)) by
// quadrature of the autocorrelation integrals; any lag >= 0.
VarianceBudget decorrelation_variance(const BathProcess& process, double window,
                                      double est_variance, double lag);

// Monte Carlo estimate of the same quantity from sampled trajectories.
double decorrelation_variance_sampled(const BathProcess& process, double window,
                                      double est_variance, double lag, long realizations,
                                      RandomStream& rng);

// Fidelity of a controlled rotation exp(-i m_k S_z tau) executed at time
// lag after the record: F = exp(-<(int A dt' - m_k tau)^2>/4). The record
// enters as angle m_k * tau; the analytic form averages over both the bath
// ensemble and the readout noise.
double rotation_fidelity(const BathProcess& process, double window, double est_variance,
                         double lag, double rotation_time);

double rotation_fidelity_sampled(const BathProcess& process, double window, double est_variance,
                                 double lag, double rotation_time, long realizations,
                                 RandomStream& rng);

// <(int_{I1} A)(int_{I2} A)> for intervals [a1,b1], [a2,b2], by quadrature.
double window_covariance(const BathProcess& process, double a1, double b1, double a2, double b2);

}  // namespace qpest
