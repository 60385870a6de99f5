#pragma once

#include <functional>
#include <vector>

#include "cogradar/spectrum.hpp"

namespace cogradar {

/// Right-tail standard normal probability Q(x).
double special_q(double x);

/// Regularized lower incomplete gamma P(3/2, b):
///   P(3/2, b) = erf(sqrt(b)) - (2/sqrt(pi)) * sqrt(b) * exp(-b).
/// Vanishes at b = 0 and approaches 1 as b -> infinity.
double special_gamma_reg_3_2(double b);

/// Per-band operating point: SNR_i = P_i/(N_0 * B_i) with B_i the two-sided
/// subband width, and the band rms bandwidth in rad/s.
struct BandOperatingPoint {
    double snr = 0.0;    // dimensionless
    double f_rms = 0.0;  // rad/s
};

/// Deterministic delay CRLB for a single full-band observation:
/// 1 / (snr * f_rms^2), in s^2.
double crlb_conventional(double snr, double f_rms);

/// Multiband delay CRLB: information adds across independent subbands,
/// 1 / sum_i snr_i * f_rms_i^2.
double crlb_cognitive(const std::vector<BandOperatingPoint>& per_band);

struct Prop1Band {
    double power = 0.0;  // P_i, W
    double alpha = 0.0;  // f_rms_i / (2*pi*B_i), dimensionless in (0, 1]
    double b = 0.0;      // B_i, two-sided subband width, Hz
};

struct Prop1Result {
    bool holds = false;
    double margin = 0.0;  // LHS - RHS, W*Hz
};

/// In-band power condition for the multiband CRLB to be at or below the
/// full-band one: sum_i P_i * alpha_i^2 * B_i >= P * alpha^2 * B_h.
/// Equivalent, term by term, to comparing the summed Fisher information.
Prop1Result check_prop1(const std::vector<Prop1Band>& bands, double total_power,
                        double alpha_full, double b_h);

/// Smallest common magnitude scale beta at which the flat-spectrum multiband
/// CRLB matches the full-band one: beta_min = B_h / sqrt(sum B_i^2).
/// Widths are two-sided subband widths.
double corollary3_min_beta(double b_h, const std::vector<double>& widths);

/// Extended Ziv-Zakai bound for the full-band radar with a uniform delay
/// prior of variance sigma_tau0_sq:
///   sigma^2 * 2Q(sqrt(snr/2)) + P(3/2, snr/4) / (snr * f_rms^2).
/// At snr = 0 the bound equals sigma_tau0_sq exactly (explicit limit branch).
double ezb_conventional(double snr, double f_rms, double sigma_tau0_sq);

/// Multiband extended Ziv-Zakai bound; snr_tilde drives the detection terms
/// while the summed per-band Fisher information sets the asymptote.
double ezb_cognitive(double snr_tilde, const std::vector<BandOperatingPoint>& per_band,
                     double sigma_tau0_sq);

/// Locate the SNR at which bound(snr)/crlb(snr) first drops below `ratio`,
/// searching [snr_lo, snr_hi]. If the ratio already sits below the target at
/// snr_lo, returns snr_lo. Requires the ratio to decrease monotonically from
/// its peak to snr_hi (checked on a scan grid). Bisection tolerance 1e-3 in
/// log10(snr).
double snr_threshold(const std::function<double(double)>& bound_curve,
                     const std::function<double(double)>& crlb_curve, double ratio,
                     double snr_lo, double snr_hi);

/// Bounds and side conditions at one operating point.
struct BoundReport {
    double snr_operating = 0.0;
    double crlb_conventional_s2 = 0.0;
    double crlb_cognitive_s2 = 0.0;
    double ezb_conventional_s2 = 0.0;
    double ezb_cognitive_s2 = 0.0;
    double sigma_tau0_sq = 0.0;
    double snr_tilde = 0.0;
    std::vector<BandOperatingPoint> per_band;
    bool condition_prop1 = false;
    double prop1_margin = 0.0;
};

/// Flat-spectrum operating points for a plan at a given full-band SNR:
/// the base magnitude is constant with total power P spread over B_h, each
/// band scaled by its beta. Returns per-band (SNR_i, F_rms_i) plus snr_tilde.
struct FlatPlanOperating {
    std::vector<BandOperatingPoint> per_band;
    std::vector<double> band_power_w;  // P_i
    double snr_tilde = 0.0;
    double f_rms_full = 0.0;  // rad/s, flat full band
};
FlatPlanOperating flat_plan_operating(const SubbandPlan& plan, double snr_full);

/// Full report for a flat-spectrum plan at one operating SNR.
BoundReport bound_report_flat(const SubbandPlan& plan, double snr_full, double sigma_tau0_sq);

}  // namespace cogradar
