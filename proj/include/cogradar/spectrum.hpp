#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cogradar {

/// Raised when a request is structurally valid but cannot be satisfied
/// (infeasible band placement, conflicting constraints).
class constraint_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an input exceeds a hard size guard (e.g. exhaustive search
/// asked for on a problem too large to enumerate).
class size_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Uniform discrete frequency grid over [f_lo, f_hi], m_points samples.
///
/// Bin k maps to f_lo + k * spacing(). A bin is also treated as a cell of
/// width spacing() starting at its sample frequency when integrating
/// piecewise-constant data (interference maps).
struct FrequencyGrid {
    double f_lo = 0.0;   // Hz
    double f_hi = 0.0;   // Hz
    int m_points = 0;

    FrequencyGrid() = default;
    FrequencyGrid(double lo, double hi, int m) : f_lo(lo), f_hi(hi), m_points(m) {
        validate();
    }

    void validate() const {
        if (!(f_hi > f_lo)) throw std::domain_error("FrequencyGrid: f_hi must exceed f_lo");
        if (m_points < 2) throw std::domain_error("FrequencyGrid: need at least 2 points");
    }

    double spacing() const { return (f_hi - f_lo) / (m_points - 1); }
    double freq(int k) const { return f_lo + k * spacing(); }
};

/// Known interference power density per grid bin plus a hard-exclusion set.
struct RadarEnvironmentMap {
    FrequencyGrid grid;
    std::vector<double> interference;  // W/Hz, one entry per bin
    std::vector<bool> excluded;        // |grid| entries; true = bin unusable

    void validate() const;
};

/// One transmit subband on the one-sided baseband axis.
///
/// `width` is the geometric one-sided extent in Hz: the band occupies
/// [f_center - width/2, f_center + width/2] within [0, B_h/2]. Together with
/// its negative-frequency image the band spans two_sided_width() = 2*width of
/// total spectrum, which is the bandwidth entering noise variances and SNRs.
struct Subband {
    double f_center = 0.0;  // Hz
    double width = 0.0;     // Hz, one-sided geometric extent
    double beta = 1.0;      // magnitude scale; power scales as beta^2

    double lo() const { return f_center - 0.5 * width; }
    double hi() const { return f_center + 0.5 * width; }
    double two_sided_width() const { return 2.0 * width; }

    void validate() const {
        if (!(width > 0.0)) throw std::domain_error("Subband: width must be positive");
        if (lo() < -1e-12 * width) throw std::domain_error("Subband: band extends below 0 Hz");
    }
};

/// A multiband transmit plan: disjoint subbands inside the one-sided extent
/// [0, full_band/2], total power and noise density.
struct SubbandPlan {
    double full_band = 0.0;      // B_h, Hz (two-sided width of the reference band)
    std::vector<Subband> bands;  // disjoint, each inside [0, full_band/2]
    double total_power = 0.0;    // W
    double noise_density = 0.0;  // N_0, W/Hz

    /// Geometry-only checks (disjointness, containment). Power conservation
    /// is checked against a concrete base spectrum, see power_check().
    void validate() const;

    /// Sum of two-sided subband widths (the paper-facing "sum of B_i").
    double coverage() const {
        double s = 0.0;
        for (const auto& b : bands) s += b.two_sided_width();
        return s;
    }
};

/// Integral of |H(f)|^2 over one band by composite trapezoid, with linear
/// interpolation of |H|^2 at fractional band edges. One-sided: the caller
/// doubles when a physical (two-sided) power is wanted.
double band_power(const FrequencyGrid& grid, std::span<const double> magnitude,
                  const Subband& band);

/// rms bandwidth (rad/s) of a real lowpass signal given its one-sided
/// magnitude samples; integrals run over [0, b_h/2]. The implied spectrum is
/// conjugate-symmetric, so the two-sided moment ratio equals the one-sided
/// one. Flat spectrum of two-sided width B gives 2*pi*B/(2*sqrt(3)).
double rms_bandwidth_lowpass(const FrequencyGrid& grid, std::span<const double> magnitude,
                             double b_h);

/// rms bandwidth (rad/s) of one subband: 2 * 2*pi * sqrt(second moment about
/// f_center / power), moments integrated over the band extent. The leading 2
/// accounts for the band's negative-frequency image; a flat band of width w
/// gives 2*pi*w/sqrt(3), i.e. the lowpass value for two-sided width 2w.
double rms_bandwidth_bandpass(const FrequencyGrid& grid, std::span<const double> magnitude,
                              const Subband& band);

}  // namespace cogradar
