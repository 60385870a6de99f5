#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cogradar/spectrum.hpp"

namespace cogradar {

/// Sampled real baseband pulse together with its cached one-sided spectrum.
///
/// The spectrum lives on the full rFFT grid [0, sample_rate/2] in
/// continuous-frequency units (|H(f)|, magnitude of the Fourier transform of
/// the sampled pulse). With that convention the one-sided doubled trapezoid
/// of |H|^2 over the whole grid equals the time-domain energy exactly, so
/// Parseval holds to rounding.
struct WaveformSpec {
    std::vector<double> samples;  // real amplitudes
    double sample_rate = 0.0;     // Hz
    double duration = 0.0;        // s; pulse support is [0, duration]
    FrequencyGrid grid;           // [0, sample_rate/2]
    std::vector<double> magnitude;  // |H(f)| on grid

    double dt() const { return 1.0 / sample_rate; }
    double time_energy() const;      // integral of h^2 dt
    double spectral_energy() const;  // 2 * integral over [0, fs/2] of |H|^2 df
    void check_parseval(double tol = 1e-6) const;
};

/// Power a subband actually carries once the spectrum is masked to it:
/// bins whose frequency falls inside the band keep their magnitude, all
/// others are zeroed, and the band integral is taken of the masked data.
/// Band powers are measured this way everywhere so that allocation and
/// synthesis agree to rounding.
double masked_band_power(const FrequencyGrid& grid, std::span<const double> magnitude,
                         const Subband& band);

/// Inverse-Fourier synthesis of a pulse from a one-sided magnitude shape
/// defined on [0, b_h/2] (zero above), linear phase centered at duration/2.
/// The result is rescaled so its measured in-band power (doubled one-sided
/// integral over [0, b_h/2]) equals p exactly.
WaveformSpec synthesize_from_magnitude(const std::function<double(double)>& shape, double b_h,
                                       double p, double sample_rate, double duration);

/// Flat spectrum over [0, b_h/2] carrying total power p.
WaveformSpec synthesize_flat_fullband(double b_h, double p, double sample_rate, double duration);

/// Multiband pulse: beta_i * base magnitude inside each subband, zero
/// elsewhere. Throws if the synthesized total power disagrees with
/// plan.total_power by more than 1e-9 relative (a bad beta normalization).
WaveformSpec synthesize_cognitive(const SubbandPlan& plan, const WaveformSpec& base);

/// Single-subband component of a waveform (spectrum masked to one band).
WaveformSpec subband_component(const WaveformSpec& wf, const Subband& band);

enum class AllocationScheme { equal_beta, equal_power, proportional };

/// Power redistribution: returns one beta per band such that the masked band
/// powers beta_i^2 * p_base_i meet the scheme and sum exactly to p.
///   equal_beta:   all betas equal
///   equal_power:  every band carries p / n_bands
///   proportional: band i carries weights[i] * p (weights renormalized)
std::vector<double> allocate_power(const std::vector<Subband>& bands, AllocationScheme scheme,
                                   const WaveformSpec& base, double p,
                                   const std::vector<double>& weights = {});

struct SnrSummary {
    double snr_full = 0.0;             // P / (N_0 * B_h)
    std::vector<double> snr_band;      // P_i / (N_0 * B_i), B_i two-sided
    double snr_tilde = 0.0;            // sum P_i / (N_0 * sum B_i)
    std::vector<double> band_power_w;  // measured P_i
};

/// SNR quantities from measured band powers of a (cognitive) waveform.
SnrSummary snr_summary(const SubbandPlan& plan, const WaveformSpec& waveform);

}  // namespace cogradar
