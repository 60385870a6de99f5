#pragma once

#include <cstdint>
#include <vector>

#include "cogradar/bounds.hpp"
#include "cogradar/rng.hpp"
#include "cogradar/spectrum.hpp"

namespace cogradar {

struct McConfig {
    int n_trials = 1000;           // >= 100
    std::vector<double> snr_grid;  // full-band SNR values, dimensionless
    double t_s = 0.0;              // observation interval, s
    int tau_grid_oversample = 8;   // estimator grid density relative to 1/B_h, >= 4
    std::uint64_t seed = 1;
    bool interpolate_peak = true;
    bool fixed_mid_tau0 = false;   // fixed mid-interval delay instead of the uniform prior
    double pulse_duration = 0.0;   // seconds; 0 selects t_s / 4
    int bins_per_band = 48;        // spectral lines per band template
    int n_threads = 0;             // 0 = auto (hardware limit, capped by COGRADAR_MAX_THREADS)

    void validate() const;
};

/// One subband of the simulation, brought to baseband: a real lowpass pulse
/// whose one-sided spectrum is the band slice relocated to [0, w], observed
/// at its Nyquist rate b = 2w with independent per-sample noise of variance
/// N_0 * b. Template amplitudes are normalized so the plain sample-energy sum
/// equals the band power P_i; with that convention the estimator's Fisher
/// information is exactly SNR_i * f_rms_i^2 per band.
struct BandTemplate {
    double w = 0.0;         // one-sided extent after aliasing, Hz
    double b = 0.0;         // two-sided width = sample rate, Hz
    double dt = 0.0;        // 1 / b
    int n_samples = 0;      // samples across the observation window
    double power = 0.0;     // P_i: plain sum of squared template samples
    double f_rms = 0.0;     // rad/s, from template derivative sums
    double tau_p = 0.0;     // pulse support length, s
    double t_center = 0.0;  // pulse center within [0, tau_p]
    double scale = 0.0;
    std::vector<double> line_freq;  // Hz
    std::vector<double> line_amp;

    /// Windowed pulse value at time t (pulse support is [0, tau_p]).
    double value(double t) const;
    double derivative(double t) const;
};

/// Simulation scenario: bands, reference power (the conventional comparator's
/// power, which defines the SNR axis through N_0 = P / (snr * B_h)), and the
/// observation geometry.
struct McModel {
    double b_h = 0.0;
    double reference_power = 0.0;
    double t_s = 0.0;
    double tau_p = 0.0;
    std::vector<BandTemplate> bands;

    double tau_max() const { return t_s - tau_p; }
    double noise_density(double snr_full) const {
        return reference_power / (snr_full * b_h);
    }
    std::vector<BandOperatingPoint> operating(double snr_full) const;
    double snr_tilde(double snr_full) const;

    /// Conventional radar: one band covering [0, b_h/2] at power p.
    static McModel fullband(double b_h, double p, const McConfig& cfg);
    /// Cognitive plan over a flat base of power p_reference spread across
    /// b_h; band i carries beta_i^2 * p_reference * B_i / B_h.
    static McModel flat_plan(const SubbandPlan& plan, double p_reference, const McConfig& cfg);
};

/// Per-band received sample streams (Nyquist rate per band).
struct ReceivedSignal {
    std::vector<std::vector<double>> band_samples;
};

/// Delayed pulse plus band-limited noise. At each band's Nyquist rate the
/// in-band flat-density noise has independent samples of variance n0 * B_i,
/// which is how it is generated.
ReceivedSignal simulate_received(const McModel& model, double tau0, double n0,
                                 RandomStream& rng);

struct DelayEstimate {
    double tau = 0.0;
    bool degenerate = false;  // flat / all-zero correlation
};

/// Grid maximum-likelihood delay estimator: per-band cross-correlations
/// combined with 1/sigma_i^2 weights, maximized over an oversampled tau grid
/// confined to [0, t_s - tau_p], optional 3-point parabolic peak refinement.
/// Ties break toward the smaller tau.
class MlDelayEstimator {
public:
    MlDelayEstimator(const McModel& model, const McConfig& cfg);

    DelayEstimate estimate(const ReceivedSignal& rx,
                           const std::vector<double>& inv_sigma_sq) const;

    double grid_step() const { return dtau_; }
    int grid_size() const { return n_lags_; }
    double grid_tau(int j) const { return j * dtau_; }

private:
    struct BankRow {
        int n0 = 0;  // first sample index with support
        std::vector<double> values;
    };
    const McModel& model_;
    bool interpolate_;
    double dtau_ = 0.0;
    int n_lags_ = 0;
    std::vector<std::vector<BankRow>> bank_;  // [band][lag]
};

struct McPoint {
    double snr = 0.0;
    double mse = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double crlb = 0.0;
    double ezb = 0.0;
};

struct McSweepResult {
    std::vector<McPoint> per_snr;
    double sigma_tau0_sq = 0.0;
    McConfig config_echo;
};

/// Monte Carlo MSE sweep with bootstrap confidence intervals (1000 seeded
/// resamples, 95%) and CRLB/EZB overlay computed from the template operating
/// points. Deterministic for a given (model, config) at any thread count.
McSweepResult run_sweep(const McModel& model, const McConfig& cfg);

}  // namespace cogradar
