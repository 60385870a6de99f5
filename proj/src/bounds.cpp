#include "cogradar/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace cogradar {

double special_q(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double special_gamma_reg_3_2(double b) {
    if (b < 0.0) throw std::domain_error("special_gamma_reg_3_2: b must be >= 0");
    const double s = std::sqrt(b);
    return std::erf(s) - (2.0 / std::sqrt(M_PI)) * s * std::exp(-b);
}

double crlb_conventional(double snr, double f_rms) {
    if (!(snr > 0.0)) throw std::domain_error("crlb_conventional: snr must be positive");
    if (!(f_rms > 0.0)) throw std::domain_error("crlb_conventional: f_rms must be positive");
    return 1.0 / (snr * f_rms * f_rms);
}

double crlb_cognitive(const std::vector<BandOperatingPoint>& per_band) {
    double fisher = 0.0;
    for (const auto& b : per_band) {
        if (b.snr < 0.0 || b.f_rms < 0.0)
            throw std::domain_error("crlb_cognitive: negative band operating point");
        fisher += b.snr * b.f_rms * b.f_rms;
    }
    if (!(fisher > 0.0)) throw std::domain_error("crlb_cognitive: zero total information");
    return 1.0 / fisher;
}

Prop1Result check_prop1(const std::vector<Prop1Band>& bands, double total_power,
                        double alpha_full, double b_h) {
    double lhs = 0.0;
    for (const auto& b : bands) lhs += b.power * b.alpha * b.alpha * b.b;
    const double rhs = total_power * alpha_full * alpha_full * b_h;
    Prop1Result r;
    r.margin = lhs - rhs;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.holds = lhs >= rhs - 1e-12 * scale;
    return r;
}

double corollary3_min_beta(double b_h, const std::vector<double>& widths) {
    if (widths.empty()) throw std::domain_error("corollary3_min_beta: widths must not be empty");
    double s = 0.0;
    for (double w : widths) {
        if (!(w > 0.0)) throw std::domain_error("corollary3_min_beta: widths must be positive");
        s += w * w;
    }
    return b_h / std::sqrt(s);
}

double ezb_conventional(double snr, double f_rms, double sigma_tau0_sq) {
    if (snr < 0.0) throw std::domain_error("ezb_conventional: snr must be >= 0");
    if (!(f_rms > 0.0)) throw std::domain_error("ezb_conventional: f_rms must be positive");
    if (!(sigma_tau0_sq > 0.0)) throw std::domain_error("ezb_conventional: prior variance must be positive");
    if (snr == 0.0) return sigma_tau0_sq;  // 2Q(0) = 1 and the gamma term vanishes
    const double prior_term = sigma_tau0_sq * 2.0 * special_q(std::sqrt(0.5 * snr));
    const double asym_term = special_gamma_reg_3_2(0.25 * snr) / (snr * f_rms * f_rms);
    return prior_term + asym_term;
}

double ezb_cognitive(double snr_tilde, const std::vector<BandOperatingPoint>& per_band,
                     double sigma_tau0_sq) {
    if (snr_tilde < 0.0) throw std::domain_error("ezb_cognitive: snr_tilde must be >= 0");
    if (!(sigma_tau0_sq > 0.0)) throw std::domain_error("ezb_cognitive: prior variance must be positive");
    if (snr_tilde == 0.0) return sigma_tau0_sq;
    double fisher = 0.0;
    for (const auto& b : per_band) fisher += b.snr * b.f_rms * b.f_rms;
    if (!(fisher > 0.0)) throw std::domain_error("ezb_cognitive: zero total information");
    const double prior_term = sigma_tau0_sq * 2.0 * special_q(std::sqrt(0.5 * snr_tilde));
    const double asym_term = special_gamma_reg_3_2(0.25 * snr_tilde) / fisher;
    return prior_term + asym_term;
}

double snr_threshold(const std::function<double(double)>& bound_curve,
                     const std::function<double(double)>& crlb_curve, double ratio,
                     double snr_lo, double snr_hi) {
    if (!(ratio > 0.0)) throw std::domain_error("snr_threshold: ratio must be positive");
    if (!(snr_lo > 0.0) || !(snr_hi > snr_lo))
        throw std::domain_error("snr_threshold: need 0 < snr_lo < snr_hi");

    auto r = [&](double s) { return bound_curve(s) / crlb_curve(s); };

    if (r(snr_lo) <= ratio) return snr_lo;  // every SNR in range already qualifies

    const int n = 512;
    const double llo = std::log10(snr_lo), lhi = std::log10(snr_hi);
    std::vector<double> grid(n), val(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = std::pow(10.0, llo + (lhi - llo) * i / (n - 1));
        val[i] = r(grid[i]);
    }

    const int peak = static_cast<int>(std::max_element(val.begin(), val.end()) - val.begin());
    for (int i = peak; i + 1 < n; ++i) {
        if (val[i + 1] > val[i] * (1.0 + 1e-9))
            throw std::runtime_error("snr_threshold: bound/CRLB ratio is not monotone decreasing past its peak");
    }
    if (val[n - 1] > ratio)
        throw std::runtime_error("snr_threshold: no crossing below the requested ratio in the search interval");

    int k = peak;
    while (k + 1 < n && val[k + 1] > ratio) ++k;
    // crossing in (grid[k], grid[k+1]]
    double a = std::log10(grid[k]), b = std::log10(grid[k + 1]);
    while (b - a > 1e-3) {
        const double m = 0.5 * (a + b);
        if (r(std::pow(10.0, m)) > ratio)
            a = m;
        else
            b = m;
    }
    return std::pow(10.0, 0.5 * (a + b));
}

FlatPlanOperating flat_plan_operating(const SubbandPlan& plan, double snr_full) {
    plan.validate();
    if (!(snr_full >= 0.0)) throw std::domain_error("flat_plan_operating: snr must be >= 0");
    const double n0 = plan.noise_density > 0.0 ? plan.noise_density : 1.0;

    // Flat base of power P over B_h has squared magnitude A^2 = P/B_h, so
    // A^2/N_0 equals the full-band SNR and SNR_i = beta_i^2 * snr_full.
    FlatPlanOperating out;
    out.f_rms_full = 2.0 * M_PI * plan.full_band / (2.0 * std::sqrt(3.0));
    double p_sum = 0.0, b_sum = 0.0;
    for (const auto& band : plan.bands) {
        const double bi = band.two_sided_width();
        BandOperatingPoint op;
        op.snr = band.beta * band.beta * snr_full;
        op.f_rms = 2.0 * M_PI * bi / (2.0 * std::sqrt(3.0));
        out.per_band.push_back(op);
        const double pi = op.snr * n0 * bi;  // P_i = SNR_i * N_0 * B_i
        out.band_power_w.push_back(pi);
        p_sum += pi;
        b_sum += bi;
    }
    out.snr_tilde = p_sum / (n0 * b_sum);
    return out;
}

BoundReport bound_report_flat(const SubbandPlan& plan, double snr_full, double sigma_tau0_sq) {
    const auto op = flat_plan_operating(plan, snr_full);
    const double n0 = plan.noise_density > 0.0 ? plan.noise_density : 1.0;

    BoundReport r;
    r.snr_operating = snr_full;
    r.sigma_tau0_sq = sigma_tau0_sq;
    r.snr_tilde = op.snr_tilde;
    r.per_band = op.per_band;
    r.crlb_conventional_s2 = crlb_conventional(snr_full, op.f_rms_full);
    r.crlb_cognitive_s2 = crlb_cognitive(op.per_band);
    r.ezb_conventional_s2 = ezb_conventional(snr_full, op.f_rms_full, sigma_tau0_sq);
    r.ezb_cognitive_s2 = ezb_cognitive(op.snr_tilde, op.per_band, sigma_tau0_sq);

    std::vector<Prop1Band> p1;
    for (size_t i = 0; i < plan.bands.size(); ++i) {
        const double bi = plan.bands[i].two_sided_width();
        Prop1Band b;
        b.power = op.band_power_w[i];
        b.alpha = op.per_band[i].f_rms / (2.0 * M_PI * bi);
        b.b = bi;
        p1.push_back(b);
    }
    const double p_full = snr_full * n0 * plan.full_band;
    const double alpha_full = op.f_rms_full / (2.0 * M_PI * plan.full_band);
    const auto pr = check_prop1(p1, p_full, alpha_full, plan.full_band);
    r.condition_prop1 = pr.holds;
    r.prop1_margin = pr.margin;
    return r;
}

}  // namespace cogradar
