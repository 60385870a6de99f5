#include "cogradar/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace cogradar {

void RadarEnvironmentMap::validate() const {
    grid.validate();
    if (interference.size() != static_cast<size_t>(grid.m_points))
        throw std::domain_error("REM: interference length must equal grid size");
    if (excluded.size() != static_cast<size_t>(grid.m_points))
        throw std::domain_error("REM: exclusion mask length must equal grid size");
    for (double v : interference) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::domain_error("REM: interference entries must be finite and >= 0");
    }
}

void SubbandPlan::validate() const {
    if (!(full_band > 0.0)) throw std::domain_error("SubbandPlan: full_band must be positive");
    if (bands.empty()) throw std::domain_error("SubbandPlan: need at least one subband");
    if (!(noise_density >= 0.0)) throw std::domain_error("SubbandPlan: noise_density must be >= 0");
    const double half = 0.5 * full_band;
    for (const auto& b : bands) {
        b.validate();
        if (b.hi() > half * (1.0 + 1e-12))
            throw std::domain_error("SubbandPlan: subband exceeds [0, B_h/2]");
    }
    auto sorted = bands;
    std::sort(sorted.begin(), sorted.end(),
              [](const Subband& a, const Subband& b) { return a.f_center < b.f_center; });
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].lo() < sorted[i - 1].hi() - 1e-12 * full_band)
            throw std::domain_error("SubbandPlan: subbands overlap");
    }
}

namespace {

// Linear interpolation of y = |H|^2 at frequency f inside the grid.
double interp_sq(const FrequencyGrid& g, std::span<const double> mag, double f) {
    const double x = (f - g.f_lo) / g.spacing();
    int k = static_cast<int>(std::floor(x));
    k = std::clamp(k, 0, g.m_points - 2);
    const double t = x - k;
    const double y0 = mag[k] * mag[k];
    const double y1 = mag[k + 1] * mag[k + 1];
    return y0 + t * (y1 - y0);
}

// Trapezoid of w(f) * |H(f)|^2 over [a, b], where w is 1 or (f - c)^2.
// Interior grid samples are used as-is; the two fractional edges use linear
// interpolation of |H|^2.
double integrate_sq(const FrequencyGrid& g, std::span<const double> mag, double a, double b,
                    bool second_moment, double c) {
    const double eps = 1e-9 * (g.f_hi - g.f_lo);
    if (a < g.f_lo - eps || b > g.f_hi + eps)
        throw std::domain_error("band outside spectrum grid");
    a = std::max(a, g.f_lo);
    b = std::min(b, g.f_hi);
    if (!(b > a)) return 0.0;

    auto weight = [&](double f) { return second_moment ? (f - c) * (f - c) : 1.0; };

    const double d = g.spacing();
    int k0 = static_cast<int>(std::ceil((a - g.f_lo) / d - 1e-12));
    int k1 = static_cast<int>(std::floor((b - g.f_lo) / d + 1e-12));
    k0 = std::clamp(k0, 0, g.m_points - 1);
    k1 = std::clamp(k1, 0, g.m_points - 1);

    if (k0 > k1) {
        // Band falls between two adjacent samples.
        const double ya = interp_sq(g, mag, a) * weight(a);
        const double yb = interp_sq(g, mag, b) * weight(b);
        return 0.5 * (ya + yb) * (b - a);
    }

    double sum = 0.0;
    for (int k = k0; k < k1; ++k) {
        const double f0 = g.freq(k), f1 = g.freq(k + 1);
        const double y0 = mag[k] * mag[k] * weight(f0);
        const double y1 = mag[k + 1] * mag[k + 1] * weight(f1);
        sum += 0.5 * (y0 + y1) * (f1 - f0);
    }
    const double fa = g.freq(k0);
    if (fa > a) {
        const double ya = interp_sq(g, mag, a) * weight(a);
        const double y0 = mag[k0] * mag[k0] * weight(fa);
        sum += 0.5 * (ya + y0) * (fa - a);
    }
    const double fb = g.freq(k1);
    if (b > fb) {
        const double y1 = mag[k1] * mag[k1] * weight(fb);
        const double yb = interp_sq(g, mag, b) * weight(b);
        sum += 0.5 * (y1 + yb) * (b - fb);
    }
    return sum;
}

}  // namespace

double band_power(const FrequencyGrid& grid, std::span<const double> magnitude,
                  const Subband& band) {
    grid.validate();
    if (magnitude.size() != static_cast<size_t>(grid.m_points))
        throw std::domain_error("band_power: magnitude length must equal grid size");
    band.validate();
    return integrate_sq(grid, magnitude, band.lo(), band.hi(), false, 0.0);
}

double rms_bandwidth_lowpass(const FrequencyGrid& grid, std::span<const double> magnitude,
                             double b_h) {
    grid.validate();
    if (magnitude.size() != static_cast<size_t>(grid.m_points))
        throw std::domain_error("rms_bandwidth_lowpass: magnitude length must equal grid size");
    if (!(b_h > 0.0)) throw std::domain_error("rms_bandwidth_lowpass: b_h must be positive");
    const double hi = std::min(0.5 * b_h, grid.f_hi);
    const double lo = std::max(0.0, grid.f_lo);
    const double p = integrate_sq(grid, magnitude, lo, hi, false, 0.0);
    if (!(p > 0.0)) throw std::domain_error("rms_bandwidth_lowpass: zero spectral power");
    const double m2 = integrate_sq(grid, magnitude, lo, hi, true, 0.0);
    return 2.0 * M_PI * std::sqrt(m2 / p);
}

double rms_bandwidth_bandpass(const FrequencyGrid& grid, std::span<const double> magnitude,
                              const Subband& band) {
    grid.validate();
    if (magnitude.size() != static_cast<size_t>(grid.m_points))
        throw std::domain_error("rms_bandwidth_bandpass: magnitude length must equal grid size");
    band.validate();
    const double p = integrate_sq(grid, magnitude, band.lo(), band.hi(), false, 0.0);
    if (!(p > 0.0)) throw std::domain_error("rms_bandwidth_bandpass: zero band power");
    const double m2 = integrate_sq(grid, magnitude, band.lo(), band.hi(), true, band.f_center);
    return 2.0 * 2.0 * M_PI * std::sqrt(m2 / p);
}

}  // namespace cogradar
