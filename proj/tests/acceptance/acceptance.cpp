// Acceptance suite: one numbered criterion per function, each printing a
// single PASS/FAIL line with the measured quantities. Run all criteria with
// no arguments or a single one with --criterion N.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstdarg>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cogradar/bandselect.hpp"
#include "cogradar/bounds.hpp"
#include "cogradar/io.hpp"
#include "cogradar/montecarlo.hpp"
#include "cogradar/rng.hpp"
#include "cogradar/spectrum.hpp"
#include "cogradar/waveform.hpp"
#include "support/oracles.hpp"

using namespace cogradar;
namespace fs = std::filesystem;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

bool report(int k, const std::string& what, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", k, what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    return pass;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

// ---------------------------------------------------------------------------
// Criterion 1: closed-form CRLBs vs the time-domain Fisher oracle.

double fisher_oracle_conventional(double b_h, double p, double n0,
                                  const std::function<double(double)>& shape) {
    const double fs = 32.0 * b_h;
    const double dur = 40000.0 / b_h;
    const auto wf = synthesize_from_magnitude(shape, b_h, p, fs, dur);
    const double snr = p / (n0 * b_h);
    return snr * oracle::f_rms_sq_time_domain(wf.samples, wf.dt());
}

bool criterion1() {
    Timer timer;
    RandomStream rng(100, 0, 0);
    double worst = 0.0;
    int n_checked = 0;

    auto check_pair = [&](double closed_crlb, double oracle_fisher) {
        const double oracle_crlb = 1.0 / oracle_fisher;
        const double rel = std::abs(closed_crlb - oracle_crlb) / oracle_crlb;
        worst = std::max(worst, rel);
        ++n_checked;
    };

    // 8 flat + 6 shaped conventional configurations.
    std::vector<std::function<double(double)>> shapes;
    for (int i = 0; i < 8; ++i) shapes.push_back([](double) { return 1.0; });
    shapes.push_back([](double f) { return 0.5 * (1.0 + std::cos(2.0 * M_PI * f)); });
    shapes.push_back([](double f) { return std::exp(-8.0 * f * f); });
    shapes.push_back([](double f) { return 1.0 + 0.25 * std::sin(3.0 * f); });
    shapes.push_back([](double f) { return 1.0 / (1.0 + 4.0 * f * f); });
    shapes.push_back([](double f) { return std::cos(1.2 * f); });
    shapes.push_back([](double f) { return 0.3 + f; });

    for (const auto& raw : shapes) {
        const double b_h = 1.0 + 9.0 * rng.next_double();
        const double p = 0.5 + 4.5 * rng.next_double();
        const double n0 = 0.1 + 1.9 * rng.next_double();
        auto shape = [&raw, b_h](double f) { return raw(f / b_h); };

        FrequencyGrid grid(0.0, 0.5 * b_h, 8192);
        std::vector<double> mag(grid.m_points);
        for (int k = 0; k < grid.m_points; ++k) mag[k] = shape(grid.freq(k));
        const double snr = p / (n0 * b_h);
        const double f_rms = rms_bandwidth_lowpass(grid, mag, b_h);
        check_pair(crlb_conventional(snr, f_rms), fisher_oracle_conventional(b_h, p, n0, shape));
    }

    // 6 flat multiband configurations: per-band Fisher from each subband's
    // baseband image, summed, against the closed multiband form.
    for (int c = 0; c < 6; ++c) {
        const double b_h = 1.0 + 7.0 * rng.next_double();
        const int nb = 2 + static_cast<int>(rng.next_double() * 2.0);
        auto plan = oracle::random_flat_plan(rng, b_h, nb, 0.3, 0.8);
        const double p_ref = 1.0 + 3.0 * rng.next_double();
        const double n0 = 0.2 + 1.3 * rng.next_double();
        for (auto& b : plan.bands) b.beta = 0.5 + 1.5 * rng.next_double();

        FrequencyGrid grid(0.0, 0.5 * b_h, 8192);
        std::vector<double> flat(grid.m_points, 1.0);
        const double a_sq = p_ref / b_h;  // flat base magnitude squared

        std::vector<BandOperatingPoint> closed_ops;
        double oracle_fisher = 0.0;
        for (const auto& band : plan.bands) {
            const double bi = band.two_sided_width();
            const double pi = band.beta * band.beta * a_sq * bi;
            const double snr_i = pi / (n0 * bi);
            BandOperatingPoint op;
            op.snr = snr_i;
            op.f_rms = rms_bandwidth_bandpass(grid, flat, band);
            closed_ops.push_back(op);

            // Baseband image of the band slice: flat over [0, w].
            const double w = band.width;
            const auto img = synthesize_from_magnitude([](double) { return 1.0; }, 2.0 * w, pi,
                                                       64.0 * w, 20000.0 / w);
            oracle_fisher += snr_i * oracle::f_rms_sq_time_domain(img.samples, img.dt());
        }
        check_pair(crlb_cognitive(closed_ops), oracle_fisher);
    }

    const double secs = timer.seconds();
    const bool pass = worst < 1e-4 && n_checked == 20 && secs < 10.0;
    return report(1, "CRLB oracle equivalence (20 configs, 1e-4)", pass,
                  fmt("worst rel dev %.2e, %d configs, %.1f s", worst, n_checked, secs));
}

// ---------------------------------------------------------------------------
// Criterion 2: equal-width subbands, any power split summing to P, flat
// slices: multiband CRLB must never exceed the full-band CRLB.

bool criterion2() {
    Timer timer;
    RandomStream rng(200, 0, 0);
    int violations = 0;
    double worst_ratio = 0.0;
    for (int it = 0; it < 1000; ++it) {
        const double b_h = 1.0 + 9.0 * rng.next_double();
        const int nb = 2 + static_cast<int>(rng.next_double() * 3.0);
        const double half = 0.5 * b_h;
        const double w = (0.1 + 0.7 * rng.next_double()) * half / nb;  // common width

        // Random placement of nb equal-width bands.
        SubbandPlan plan;
        plan.full_band = b_h;
        plan.noise_density = 1.0;
        double cursor = 0.0;
        const double slack = half - nb * w;
        std::vector<double> gaps(nb + 1);
        double gsum = 0.0;
        for (auto& g : gaps) {
            g = rng.next_double();
            gsum += g;
        }
        for (int i = 0; i < nb; ++i) {
            cursor += gaps[i] * slack / gsum;
            Subband band;
            band.width = w;
            band.f_center = cursor + 0.5 * w;
            plan.bands.push_back(band);
            cursor += w;
        }

        // Random power split P_i summing to P over the flat base A^2 = P/B_h:
        // beta_i^2 = P_i / (A^2 B_i).
        const double p = 0.5 + 2.0 * rng.next_double();
        std::vector<double> share(nb);
        double ssum = 0.0;
        for (auto& s : share) {
            s = 0.05 + rng.next_double();
            ssum += s;
        }
        const double a_sq = p / b_h;
        for (int i = 0; i < nb; ++i) {
            const double pi = p * share[i] / ssum;
            plan.bands[i].beta = std::sqrt(pi / (a_sq * plan.bands[i].two_sided_width()));
        }

        const double snr = 0.25 + 4.0 * rng.next_double();
        const auto op = flat_plan_operating(plan, snr);
        const double c_cr = crlb_cognitive(op.per_band);
        const double c_r = crlb_conventional(snr, op.f_rms_full);
        worst_ratio = std::max(worst_ratio, c_cr / c_r);
        if (c_cr > c_r * (1.0 + 1e-12)) ++violations;
    }
    const double secs = timer.seconds();
    const bool pass = violations == 0 && secs < 5.0;
    // With conserved total power, a flat equal-width plan has
    // CRLB_CR/CRLB_R = B_h/b for any power split (the split cancels), so the
    // claimed ordering cannot hold for proper subbands; see the measured
    // ratios. The check is kept as stated.
    return report(2, "equal-width subbands: CRLB_CR <= CRLB_R on 1000 plans", pass,
                  fmt("%d violations, worst CRLB_CR/CRLB_R = %.3f (= B_h/b), %.1f s", violations,
                      worst_ratio, secs));
}

// ---------------------------------------------------------------------------
// Criterion 3: the in-band power condition verdict must match the direct
// CRLB comparison on every random flat plan.

bool criterion3() {
    RandomStream rng(300, 0, 0);
    int mismatches = 0, holds = 0;
    for (int it = 0; it < 1000; ++it) {
        const double b_h = 1.0 + 9.0 * rng.next_double();
        const int nb = 1 + static_cast<int>(rng.next_double() * 3.0);
        auto plan = oracle::random_flat_plan(rng, b_h, nb, 0.1, 0.95);
        for (auto& b : plan.bands) b.beta = 0.2 + 5.0 * rng.next_double();
        const auto rep = bound_report_flat(plan, 0.25 + 4.0 * rng.next_double(), 1.0);
        const bool crlb_better = rep.crlb_cognitive_s2 <= rep.crlb_conventional_s2 * (1.0 + 1e-12);
        if (rep.condition_prop1 != crlb_better) ++mismatches;
        if (rep.condition_prop1) ++holds;
    }
    const bool pass = mismatches == 0 && holds > 0 && holds < 1000;
    return report(3, "power-condition verdict matches sign(CRLB_R - CRLB_CR) on 1000 plans", pass,
                  fmt("%d mismatches, condition held on %d/1000", mismatches, holds));
}

// ---------------------------------------------------------------------------
// Criterion 4: equal-beta CRLB-equality threshold vs bisection.

bool criterion4() {
    RandomStream rng(400, 0, 0);
    double worst = 0.0;
    for (int it = 0; it < 50; ++it) {
        const double b_h = 1.0 + 9.0 * rng.next_double();
        const int nb = 1 + static_cast<int>(rng.next_double() * 3.0);
        auto plan = oracle::random_flat_plan(rng, b_h, nb, 0.15, 0.9);
        std::vector<double> widths;
        for (const auto& b : plan.bands) widths.push_back(b.two_sided_width());
        const double formula = corollary3_min_beta(b_h, widths);

        auto ratio = [&](double beta) {
            auto p = plan;
            for (auto& b : p.bands) b.beta = beta;
            const auto op = flat_plan_operating(p, 1.0);
            return crlb_cognitive(op.per_band) / crlb_conventional(1.0, op.f_rms_full);
        };
        double lo = 1e-6, hi = 1e6;
        while (hi / lo - 1.0 > 1e-14) {
            const double mid = std::sqrt(lo * hi);
            (ratio(mid) > 1.0 ? lo : hi) = mid;
        }
        const double bisect = std::sqrt(lo * hi);
        worst = std::max(worst, std::abs(formula - bisect) / formula);
    }
    const bool pass = worst < 1e-9;
    return report(4, "equal-beta threshold matches CRLB-equality bisection (50 sets)", pass,
                  fmt("worst rel dev %.2e", worst));
}

// ---------------------------------------------------------------------------
// Criterion 5: EZB limits at snr = 0 and snr = 1e6.

bool criterion5() {
    const double s2 = 7.0 / 12.0;
    bool pass = true;
    std::string detail;

    const double f_rms = 2.0 * M_PI * 3.0 / (2.0 * std::sqrt(3.0));
    pass &= ezb_conventional(0.0, f_rms, s2) == s2;

    SubbandPlan plan;
    plan.full_band = 3.0;
    plan.noise_density = 1.0;
    Subband b1;
    b1.f_center = 0.3;
    b1.width = 0.4;
    b1.beta = 2.0;
    Subband b2;
    b2.f_center = 1.1;
    b2.width = 0.3;
    b2.beta = 1.0;
    plan.bands = {b1, b2};
    const auto op0 = flat_plan_operating(plan, 1.0);
    pass &= ezb_cognitive(0.0, op0.per_band, s2) == s2;

    const double snr = 1e6;
    const double r_conv = ezb_conventional(snr, f_rms, s2) / crlb_conventional(snr, f_rms);
    const auto op = flat_plan_operating(plan, snr);
    const double r_cog = ezb_cognitive(op.snr_tilde, op.per_band, s2) / crlb_cognitive(op.per_band);
    pass &= r_conv >= 1.0 && r_conv <= 1.01;
    pass &= r_cog >= 1.0 && r_cog <= 1.01;
    return report(5, "EZB limits: prior variance at snr 0, CRLB ratio in [1, 1.01] at snr 1e6",
                  pass, fmt("ratios %.6f (conv), %.6f (cog)", r_conv, r_cog));
}

// ---------------------------------------------------------------------------
// Criterion 6: matched-CRLB pairs order their thresholds and EZB curves.

bool criterion6() {
    RandomStream rng(600, 0, 0);
    int ordered = 0, pointwise_ok = 0;
    const int n_pairs = 20;
    for (int it = 0; it < n_pairs; ++it) {
        const double b_h = 1.0 + 4.0 * rng.next_double();
        const int nb = 2 + static_cast<int>(rng.next_double() * 3.0);
        auto plan = oracle::random_flat_plan(rng, b_h, nb, 0.25, 0.8);
        std::vector<double> widths;
        for (const auto& b : plan.bands) widths.push_back(b.two_sided_width());
        const double beta = corollary3_min_beta(b_h, widths);
        for (auto& b : plan.bands) b.beta = beta;

        const double t_s = 32.0 / b_h;
        const double s2 = t_s * t_s / 12.0;
        const double f_rms = flat_plan_operating(plan, 1.0).f_rms_full;

        auto bound_r = [&](double s) { return ezb_conventional(s, f_rms, s2); };
        auto crlb_r = [&](double s) { return crlb_conventional(s, f_rms); };
        auto bound_cr = [&](double s) {
            const auto op = flat_plan_operating(plan, s);
            return ezb_cognitive(op.snr_tilde, op.per_band, s2);
        };
        auto crlb_cr = [&](double s) {
            return crlb_cognitive(flat_plan_operating(plan, s).per_band);
        };
        const double th_r = snr_threshold(bound_r, crlb_r, 1.25, 1e-2, 1e8);
        const double th_cr = snr_threshold(bound_cr, crlb_cr, 1.25, 1e-2, 1e8);
        if (th_cr <= th_r * (1.0 + 1e-9)) ++ordered;

        bool pw = true;
        for (int i = 0; i <= 40; ++i) {
            const double snr = std::pow(10.0, (-10.0 + i) / 10.0);
            if (bound_cr(snr) > bound_r(snr) * (1.0 + 1e-12)) pw = false;
        }
        if (pw) ++pointwise_ok;
    }
    const bool pass = ordered == n_pairs && pointwise_ok == n_pairs;
    return report(6, "matched-CRLB pairs: threshold ordering and pointwise EZB ordering", pass,
                  fmt("%d/%d thresholds ordered, %d/%d pointwise", ordered, n_pairs,
                      pointwise_ok, n_pairs));
}

// ---------------------------------------------------------------------------
// Criterion 7: greedy vs exhaustive selection.

bool criterion7() {
    // N_b = 1: greedy must equal the oracle exactly on every instance.
    RandomStream seeds(700, 0, 0);
    int nb1_mismatch = 0;
    for (int it = 0; it < 100; ++it) {
        RadarEnvironmentMap rem;
        rem.grid = FrequencyGrid(0.0, 63.0, 64);
        rem.interference.assign(64, 0.0);
        rem.excluded.assign(64, false);
        RandomStream rng(seeds.next_u64(), 0, 0);
        for (auto& v : rem.interference) v = rng.next_double();
        SelectionConstraints c;
        c.n_bands = 1;
        c.widths_bins = {4 + static_cast<int>(rng.next_double() * 12.0)};
        const auto g = select_bands_greedy(rem, c);
        const auto o = select_bands_oracle(rem, c);
        if (g.start_bins != o.start_bins || std::abs(g.objective - o.objective) > 1e-12)
            ++nb1_mismatch;
    }

    // 200-instance corpus, 64 bins, N_b = 2: structured interference (a few
    // contiguous emitter humps over a low noise floor) plus one exclusion
    // block, the shape real environment maps take.
    int exact = 0;
    double worst_ratio = 1.0;
    RandomStream seeds2(701, 0, 0);
    for (int it = 0; it < 200; ++it) {
        RadarEnvironmentMap rem;
        rem.grid = FrequencyGrid(0.0, 63.0, 64);
        rem.interference.assign(64, 0.0);
        rem.excluded.assign(64, false);
        RandomStream rng(seeds2.next_u64(), 0, 0);
        for (auto& v : rem.interference) v = 0.5 * (1.0 + rng.next_double());
        const int n_humps = 2 + static_cast<int>(rng.next_double() * 2.0);
        for (int h = 0; h < n_humps; ++h) {
            const double center = 64.0 * rng.next_double();
            const double hw = 2.0 + 6.0 * rng.next_double();
            const double amp = 0.5 + 1.5 * rng.next_double();
            for (int k = 0; k < 64; ++k) {
                const double u = (k - center) / hw;
                if (std::abs(u) < 1.0)
                    rem.interference[k] += amp * 0.5 * (1.0 + std::cos(M_PI * u));
            }
        }
        const int excl_start = static_cast<int>(rng.next_double() * 56.0);
        for (int k = excl_start; k < excl_start + 4; ++k) rem.excluded[k] = true;
        SelectionConstraints c;
        c.n_bands = 2;
        c.widths_bins = {8};
        c.min_separation_bins = 4;

        const auto o = select_bands_oracle(rem, c);
        const auto g = select_bands_greedy(rem, c);
        if (g.objective <= o.objective * (1.0 + 1e-12)) {
            ++exact;
            worst_ratio = std::max(worst_ratio, 1.0);
        } else {
            worst_ratio = std::max(worst_ratio, g.objective / o.objective);
        }
    }

    // Corpus regression anchors, frozen from the first run of this suite.
    const int frozen_exact = 186;
    const double frozen_worst = 1.0492126503535439;
    const bool frozen_ok = exact == frozen_exact &&
                           std::abs(worst_ratio - frozen_worst) < 1e-9;

    const bool pass = nb1_mismatch == 0 && exact >= 180 && worst_ratio <= 1.1 && frozen_ok;
    return report(7, "greedy vs oracle: exact for N_b = 1, near-exact corpus at N_b = 2", pass,
                  fmt("nb1 mismatches %d, exact %d/200, worst ratio %.6f", nb1_mismatch, exact,
                      worst_ratio));
}

// ---------------------------------------------------------------------------
// Criterion 8: Monte Carlo validation of the bound curves.

struct SweepSummary {
    McSweepResult sweep;
    McModel model;
};

bool criterion8() {
    Timer timer;
    const double b_h = 1.0, p = 1.0;
    const double t_s = 160.0, tau_p = 40.0;

    McConfig cfg;
    cfg.n_trials = 10000;
    cfg.t_s = t_s;
    cfg.pulse_duration = tau_p;
    cfg.tau_grid_oversample = 8;
    cfg.seed = 808;
    cfg.interpolate_peak = true;

    // Conventional sweep over [-10, 30] dB.
    McConfig conv_cfg = cfg;
    for (int db = -10; db <= 30; db += 5) conv_cfg.snr_grid.push_back(std::pow(10.0, db / 10.0));
    const auto conv_model = McModel::fullband(b_h, p, conv_cfg);
    const auto conv = run_sweep(conv_model, conv_cfg);

    // Matched-CRLB cognitive plan with two-sided coverage B_h/4. The wide
    // band carries nearly all information so the multiband EZB detection
    // term stays faithful; beta_1 is solved from the template-level
    // Fisher-matching condition with beta_2 fixed at 1.
    SubbandPlan plan;
    plan.full_band = b_h;
    plan.noise_density = 1.0;
    Subband wide;
    wide.width = 0.10;
    wide.f_center = 0.15;
    wide.beta = 1.0;
    Subband narrow;
    narrow.width = 0.025;
    narrow.f_center = 0.40;
    narrow.beta = 1.0;
    plan.bands = {wide, narrow};

    McConfig cog_cfg = cfg;
    for (int db = -25; db <= 30; db += 5) cog_cfg.snr_grid.push_back(std::pow(10.0, db / 10.0));
    {
        // Probe templates at beta = 1 to solve beta_1 for Fisher matching.
        const auto probe = McModel::flat_plan(plan, p, cog_cfg);
        const auto conv_ops = conv_model.operating(1.0);
        const double target = conv_ops[0].snr * conv_ops[0].f_rms * conv_ops[0].f_rms;
        const auto ops = probe.operating(1.0);
        const double i_wide = ops[0].snr * ops[0].f_rms * ops[0].f_rms;
        const double i_narrow = ops[1].snr * ops[1].f_rms * ops[1].f_rms;
        plan.bands[0].beta = std::sqrt((target - i_narrow) / i_wide);
    }
    const auto cog_model = McModel::flat_plan(plan, p, cog_cfg);
    const auto cog = run_sweep(cog_model, cog_cfg);

    // (matched check) CRLB overlays agree at a common snr.
    const double crlb_match =
        std::abs(cog.per_snr.back().crlb - conv.per_snr.back().crlb) / conv.per_snr.back().crlb;

    // (a) MSE >= 0.8 EZB at every point of both sweeps.
    bool above = true;
    double worst_above = 1e300;
    for (const auto& s : {conv, cog})
        for (const auto& pt : s.per_snr) {
            worst_above = std::min(worst_above, pt.mse / pt.ezb);
            if (pt.mse < 0.8 * pt.ezb) above = false;
        }

    // (b) top-snr efficiency with peak interpolation.
    const double eff_conv = conv.per_snr.back().mse / conv.per_snr.back().crlb;
    const double eff_cog = cog.per_snr.back().mse / cog.per_snr.back().crlb;
    const bool eff_ok = eff_conv >= 1.0 && eff_conv <= 1.5 && eff_cog >= 1.0 && eff_cog <= 1.5;

    // (c) conventional at -10 dB sits at the prior-clamped error level.
    const double prior_ref = conv_model.tau_max() * conv_model.tau_max() / 6.0;
    const double low = conv.per_snr.front().mse;
    const bool low_ok = std::abs(low - prior_ref) <= 0.2 * prior_ref;

    // (d) departure from the prior plateau: cognitive at least 2 dB earlier.
    auto departure_db = [](const McSweepResult& s, double plateau) {
        const double target = 0.5 * plateau;
        for (size_t i = 0; i + 1 < s.per_snr.size(); ++i) {
            const double m0 = s.per_snr[i].mse, m1 = s.per_snr[i + 1].mse;
            if (m0 >= target && m1 < target) {
                const double d0 = 10.0 * std::log10(s.per_snr[i].snr);
                const double d1 = 10.0 * std::log10(s.per_snr[i + 1].snr);
                const double t = (std::log10(m0) - std::log10(target)) /
                                 (std::log10(m0) - std::log10(m1));
                return d0 + t * (d1 - d0);
            }
        }
        return 1e300;
    };
    const double dep_conv = departure_db(conv, prior_ref);
    const double dep_cog = departure_db(cog, prior_ref);
    const bool dep_ok = dep_cog <= dep_conv - 2.0;

    const double secs = timer.seconds();
    const bool pass = above && eff_ok && low_ok && dep_ok && crlb_match < 1e-9 && secs < 300.0;
    return report(
        8, "Monte Carlo bound validation (10^4 trials/point)", pass,
        fmt("min mse/ezb %.2f, eff %.3f/%.3f, low mse/ref %.3f, departures %.1f/%.1f dB, %.0f s",
            worst_above, eff_conv, eff_cog, low / prior_ref, dep_cog, dep_conv, secs));
}

// ---------------------------------------------------------------------------
// Criterion 9: pipeline determinism (byte-identical artifacts).

bool criterion9() {
    const auto dir = fs::temp_directory_path() / "cogradar_acceptance_9";
    fs::remove_all(dir);
    fs::create_directories(dir);

    RadarEnvironmentMap rem;
    rem.grid = FrequencyGrid(0.0, 31.5, 64);
    rem.interference.assign(64, 0.0);
    rem.excluded.assign(64, false);
    RandomStream rng(909, 0, 0);
    for (auto& v : rem.interference) v = rng.next_double();
    for (int k = 12; k < 16; ++k) rem.excluded[k] = true;
    save_rem_csv(rem, (dir / "rem.csv").string());

    auto write_cfg = [&](const fs::path& cfg_path, const fs::path& out_dir) {
        std::ofstream out(cfg_path);
        out << "rem_path = " << (dir / "rem.csv").string() << "\n"
            << "n_bands = 2\nwidth_bins = 8\nmin_sep_bins = 2\nmethod = oracle\n"
            << "allocation = equal_beta\n"
            << "p_watts = 1.0\nn0_w_per_hz = 0.5\nb_h_hz = 64.0\nt_s_sec = 2.0\n"
            << "snr_db_lo = -10\nsnr_db_hi = 30\nsnr_points = 5\n"
            << "mc_trials = 400\nmc_seed = 17\nout_dir = " << out_dir.string() << "\n";
    };
    write_cfg(dir / "a.cfg", dir / "out_a");
    write_cfg(dir / "b.cfg", dir / "out_b");

    auto run = [&](const fs::path& cfg_path) {
        const std::string cmd = std::string(COGRADAR_CLI_PATH) + " pipeline --config " +
                                cfg_path.string() + " > /dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    const int rc_a = run(dir / "a.cfg");
    const int rc_b = run(dir / "b.cfg");

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool identical = rc_a == 0 && rc_b == 0;
    int n_files = 0;
    for (const char* f : {"bands.json", "waveform.csv", "bounds.csv", "mc.csv", "report.json"}) {
        const auto a = slurp(dir / "out_a" / f);
        const auto b = slurp(dir / "out_b" / f);
        if (a.empty() || a != b) identical = false;
        ++n_files;
    }
    return report(9, "pipeline determinism: two runs give byte-identical artifacts", identical,
                  fmt("exit codes %d/%d, %d files compared", rc_a, rc_b, n_files));
}

// ---------------------------------------------------------------------------
// Criterion 10: power conservation of every synthesized cognitive waveform.

bool criterion10() {
    RandomStream rng(1000, 0, 0);
    double worst = 0.0;
    int n_configs = 0;
    for (int it = 0; it < 50; ++it) {
        const double b_h = 1.0 + 9.0 * rng.next_double();
        const double p = 0.25 + 4.0 * rng.next_double();
        const int nb = 1 + static_cast<int>(rng.next_double() * 3.0);
        auto plan = oracle::random_flat_plan(rng, b_h, nb, 0.2, 0.8);
        plan.total_power = p;

        const auto base = synthesize_flat_fullband(b_h, p, 4.0 * b_h, 2048.0 / b_h);
        const int scheme_pick = it % 3;
        std::vector<double> betas;
        try {
            if (scheme_pick == 0)
                betas = allocate_power(plan.bands, AllocationScheme::equal_beta, base, p);
            else if (scheme_pick == 1)
                betas = allocate_power(plan.bands, AllocationScheme::equal_power, base, p);
            else {
                std::vector<double> w(plan.bands.size());
                double wsum = 0.0;
                for (auto& v : w) {
                    v = 0.2 + rng.next_double();
                    wsum += v;
                }
                for (auto& v : w) v /= wsum;
                betas = allocate_power(plan.bands, AllocationScheme::proportional, base, p, w);
            }
        } catch (const std::domain_error&) {
            continue;  // band narrower than the synthesis grid
        }
        for (size_t i = 0; i < plan.bands.size(); ++i) plan.bands[i].beta = betas[i];

        const auto wf = synthesize_cognitive(plan, base);
        double measured = 0.0;
        for (const auto& b : plan.bands)
            measured += 2.0 * masked_band_power(wf.grid, wf.magnitude, b);
        worst = std::max(worst, std::abs(measured - p) / p);
        ++n_configs;
    }
    const bool pass = worst < 1e-9 && n_configs >= 40;
    return report(10, "power conservation of synthesized cognitive waveforms (1e-9)", pass,
                  fmt("worst rel dev %.2e over %d configs", worst, n_configs));
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }
    std::vector<std::function<bool()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                   criterion5, criterion6, criterion7, criterion8,
                                                   criterion9, criterion10};
    bool all = true;
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) {
        if (only != 0 && k != only) continue;
        bool ok = false;
        try {
            ok = criteria[k - 1]();
        } catch (const std::exception& e) {
            report(k, "criterion threw", false, e.what());
        }
        all = all && ok;
    }
    return all ? 0 : 1;
}
