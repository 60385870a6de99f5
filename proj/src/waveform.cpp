#include "cogradar/waveform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>

namespace cogradar {

namespace {

std::mutex fftw_plan_mutex;  // FFTW planning is not thread-safe

// h[n] for n in [0, N) from one-sided continuous-unit spectrum values.
std::vector<double> inverse_rfft(const std::vector<std::complex<double>>& spec, int n,
                                 double df) {
    std::vector<std::complex<double>> in(spec);
    std::vector<double> out(n);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_plan plan = fftw_plan_dft_c2r_1d(
            n, reinterpret_cast<fftw_complex*>(in.data()), out.data(), FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    for (double& v : out) v *= df;
    return out;
}

int sample_count(double sample_rate, double duration) {
    int n = static_cast<int>(std::llround(sample_rate * duration));
    if (n % 2 != 0) ++n;
    if (n < 16) throw std::domain_error("waveform: duration too short for the sample rate");
    return n;
}

WaveformSpec from_spectrum(std::vector<double> magnitude, double sample_rate, int n) {
    const double df = sample_rate / n;
    const double t_c = 0.5 * n / sample_rate;  // linear phase, time-centered pulse
    std::vector<std::complex<double>> spec(n / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) {
        const double ph = -2.0 * M_PI * (k * df) * t_c;
        spec[k] = std::polar(magnitude[k], ph);
    }
    WaveformSpec wf;
    wf.sample_rate = sample_rate;
    wf.duration = n / sample_rate;
    wf.grid = FrequencyGrid(0.0, 0.5 * sample_rate, n / 2 + 1);
    wf.magnitude = std::move(magnitude);
    wf.samples = inverse_rfft(spec, n, df);
    return wf;
}

void scale_waveform(WaveformSpec& wf, double s) {
    for (double& v : wf.samples) v *= s;
    for (double& v : wf.magnitude) v *= s;
}

Subband full_grid_band(const FrequencyGrid& g) {
    Subband b;
    b.f_center = 0.5 * (g.f_lo + g.f_hi);
    b.width = g.f_hi - g.f_lo;
    return b;
}

std::vector<double> mask_to_bands(const FrequencyGrid& grid, std::span<const double> magnitude,
                                  std::span<const Subband> bands,
                                  std::span<const double> betas) {
    std::vector<double> out(magnitude.size(), 0.0);
    const double tol = 1e-9 * grid.spacing();
    for (size_t i = 0; i < bands.size(); ++i) {
        const double beta = betas.empty() ? 1.0 : betas[i];
        for (int k = 0; k < grid.m_points; ++k) {
            const double f = grid.freq(k);
            if (f >= bands[i].lo() - tol && f <= bands[i].hi() + tol) out[k] = beta * magnitude[k];
        }
    }
    return out;
}

}  // namespace

double WaveformSpec::time_energy() const {
    double e = 0.0;
    for (double v : samples) e += v * v;
    return e * dt();
}

double WaveformSpec::spectral_energy() const {
    return 2.0 * band_power(grid, magnitude, full_grid_band(grid));
}

void WaveformSpec::check_parseval(double tol) const {
    const double te = time_energy(), se = spectral_energy();
    const double scale = std::max(std::abs(te), std::abs(se));
    if (scale == 0.0) return;
    if (std::abs(te - se) > tol * scale)
        throw std::runtime_error("WaveformSpec: Parseval check failed");
}

double masked_band_power(const FrequencyGrid& grid, std::span<const double> magnitude,
                         const Subband& band) {
    const auto masked = mask_to_bands(grid, magnitude, std::span<const Subband>(&band, 1), {});
    return band_power(grid, masked, band);
}

WaveformSpec synthesize_from_magnitude(const std::function<double(double)>& shape, double b_h,
                                       double p, double sample_rate, double duration) {
    if (!(b_h > 0.0)) throw std::domain_error("synthesize: b_h must be positive");
    if (p < 0.0) throw std::domain_error("synthesize: power must be >= 0");
    if (sample_rate < b_h)
        throw std::domain_error("synthesize: sample rate below Nyquist for the band");
    const int n = sample_count(sample_rate, duration);
    const double df = sample_rate / n;

    std::vector<double> mag(n / 2 + 1, 0.0);
    for (int k = 0; k <= n / 2; ++k) {
        const double f = k * df;
        if (f <= 0.5 * b_h * (1.0 + 1e-12)) mag[k] = shape(f);
    }
    WaveformSpec wf = from_spectrum(std::move(mag), sample_rate, n);
    if (p == 0.0) {
        scale_waveform(wf, 0.0);
        return wf;
    }
    Subband full;
    full.f_center = 0.25 * b_h;
    full.width = 0.5 * b_h;
    const double measured = 2.0 * band_power(wf.grid, wf.magnitude, full);
    if (!(measured > 0.0)) throw std::domain_error("synthesize: magnitude shape has zero in-band power");
    scale_waveform(wf, std::sqrt(p / measured));
    return wf;
}

WaveformSpec synthesize_flat_fullband(double b_h, double p, double sample_rate, double duration) {
    return synthesize_from_magnitude([](double) { return 1.0; }, b_h, p, sample_rate, duration);
}

WaveformSpec synthesize_cognitive(const SubbandPlan& plan, const WaveformSpec& base) {
    plan.validate();
    // Bands with different betas must not share a spectrum panel, or the
    // masked edge bins cannot carry both scales.
    auto sorted = plan.bands;
    std::sort(sorted.begin(), sorted.end(),
              [](const Subband& a, const Subband& b) { return a.f_center < b.f_center; });
    for (size_t i = 1; i < sorted.size(); ++i) {
        const double gap = sorted[i].lo() - sorted[i - 1].hi();
        if (gap < base.grid.spacing() && std::abs(sorted[i].beta - sorted[i - 1].beta) > 1e-12)
            throw std::domain_error(
                "synthesize_cognitive: bands with different betas are closer than the synthesis grid resolution");
    }
    std::vector<double> betas;
    for (const auto& b : plan.bands) betas.push_back(b.beta);
    auto masked = mask_to_bands(base.grid, base.magnitude, plan.bands, betas);

    const int n = static_cast<int>(base.samples.size());
    WaveformSpec wf = from_spectrum(std::move(masked), base.sample_rate, n);

    double total = 0.0;
    for (const auto& b : plan.bands) total += 2.0 * band_power(wf.grid, wf.magnitude, b);
    const double scale = std::max(std::abs(total), std::abs(plan.total_power));
    if (scale > 0.0 && std::abs(total - plan.total_power) > 1e-9 * scale)
        throw std::runtime_error("synthesize_cognitive: synthesized power disagrees with the plan (bad beta normalization)");
    return wf;
}

WaveformSpec subband_component(const WaveformSpec& wf, const Subband& band) {
    auto masked = mask_to_bands(wf.grid, wf.magnitude, std::span<const Subband>(&band, 1), {});
    return from_spectrum(std::move(masked), wf.sample_rate, static_cast<int>(wf.samples.size()));
}

std::vector<double> allocate_power(const std::vector<Subband>& bands, AllocationScheme scheme,
                                   const WaveformSpec& base, double p,
                                   const std::vector<double>& weights) {
    if (bands.empty()) throw std::domain_error("allocate_power: no bands");
    if (!(p > 0.0)) throw std::domain_error("allocate_power: power must be positive");
    const size_t nb = bands.size();

    std::vector<double> base_power(nb);
    for (size_t i = 0; i < nb; ++i)
        base_power[i] = 2.0 * masked_band_power(base.grid, base.magnitude, bands[i]);

    std::vector<double> share(nb);  // target P_i / P
    switch (scheme) {
        case AllocationScheme::equal_beta: {
            double total = 0.0;
            for (double bp : base_power) total += bp;
            if (!(total > 0.0)) throw std::domain_error("allocate_power: zero base power in all bands");
            for (size_t i = 0; i < nb; ++i) share[i] = base_power[i] / total;
            break;
        }
        case AllocationScheme::equal_power:
            for (size_t i = 0; i < nb; ++i) share[i] = 1.0 / static_cast<double>(nb);
            break;
        case AllocationScheme::proportional: {
            if (weights.size() != nb)
                throw std::domain_error("allocate_power: need one weight per band");
            double wsum = 0.0;
            for (double w : weights) {
                if (!(w > 0.0)) throw std::domain_error("allocate_power: weights must be positive");
                wsum += w;
            }
            for (size_t i = 0; i < nb; ++i) share[i] = weights[i] / wsum;
            break;
        }
    }

    std::vector<double> betas(nb);
    for (size_t i = 0; i < nb; ++i) {
        const double target = share[i] * p;
        if (target > 0.0 && !(base_power[i] > 0.0))
            throw std::domain_error("allocate_power: a band with zero base power was assigned power");
        betas[i] = base_power[i] > 0.0 ? std::sqrt(target / base_power[i]) : 0.0;
    }
    return betas;
}

SnrSummary snr_summary(const SubbandPlan& plan, const WaveformSpec& waveform) {
    plan.validate();
    if (!(plan.noise_density > 0.0))
        throw std::domain_error("snr_summary: plan needs a positive noise density");
    SnrSummary s;
    double p_sum = 0.0, b_sum = 0.0;
    for (const auto& band : plan.bands) {
        const double pi = 2.0 * masked_band_power(waveform.grid, waveform.magnitude, band);
        const double bi = band.two_sided_width();
        s.band_power_w.push_back(pi);
        s.snr_band.push_back(pi / (plan.noise_density * bi));
        p_sum += pi;
        b_sum += bi;
    }
    s.snr_full = p_sum / (plan.noise_density * plan.full_band);
    s.snr_tilde = p_sum / (plan.noise_density * b_sum);
    return s;
}

}  // namespace cogradar
