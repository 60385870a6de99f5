#include "cogradar/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace cogradar {

void McConfig::validate() const {
    if (n_trials < 100) throw std::domain_error("McConfig: n_trials must be >= 100");
    if (snr_grid.empty()) throw std::domain_error("McConfig: snr_grid must not be empty");
    for (double s : snr_grid)
        if (!(s > 0.0)) throw std::domain_error("McConfig: SNR grid values must be positive");
    if (!(t_s > 0.0)) throw std::domain_error("McConfig: t_s must be positive");
    if (tau_grid_oversample < 4)
        throw std::domain_error("McConfig: tau_grid_oversample must be >= 4");
    if (pulse_duration < 0.0 || pulse_duration >= t_s)
        throw std::domain_error("McConfig: pulse_duration must lie in [0, t_s)");
    if (bins_per_band < 4) throw std::domain_error("McConfig: bins_per_band must be >= 4");
}

namespace {

// Tukey taper over [-h, h]: flat inside, cosine rolloff over the outer
// fraction. Keeps the truncated pulse's spectral spillover far below the
// per-band Nyquist rate, which would otherwise alias into the sampled
// correlation and warp the peak.
constexpr double kTaperFraction = 0.3;

double taper(double u, double h) {
    const double a = std::abs(u);
    if (a > h) return 0.0;
    const double flat = (1.0 - kTaperFraction) * h;
    if (a <= flat) return 1.0;
    const double x = (a - flat) / (h - flat);
    return 0.5 * (1.0 + std::cos(M_PI * x));
}

double taper_derivative(double u, double h) {
    const double a = std::abs(u);
    const double flat = (1.0 - kTaperFraction) * h;
    if (a <= flat || a > h) return 0.0;
    const double x = (a - flat) / (h - flat);
    const double d = -0.5 * M_PI * std::sin(M_PI * x) / (h - flat);
    return u >= 0.0 ? d : -d;
}

}  // namespace

double BandTemplate::value(double t) const {
    const double u = t - t_center;
    const double h = 0.5 * tau_p;
    if (std::abs(u) > h) return 0.0;
    double s = 0.0;
    for (size_t k = 0; k < line_freq.size(); ++k)
        s += line_amp[k] * std::cos(2.0 * M_PI * line_freq[k] * u);
    return scale * taper(u, h) * s;
}

double BandTemplate::derivative(double t) const {
    const double u = t - t_center;
    const double h = 0.5 * tau_p;
    if (std::abs(u) > h) return 0.0;
    double s = 0.0, sd = 0.0;
    for (size_t k = 0; k < line_freq.size(); ++k) {
        const double w2pi = 2.0 * M_PI * line_freq[k];
        s += line_amp[k] * std::cos(w2pi * u);
        sd -= line_amp[k] * w2pi * std::sin(w2pi * u);
    }
    return scale * (taper(u, h) * sd + taper_derivative(u, h) * s);
}

namespace {

BandTemplate make_band(double w, double band_power, double t_s, double tau_p, int n_lines) {
    BandTemplate bt;
    bt.w = w;
    bt.b = 2.0 * w;
    bt.dt = 1.0 / bt.b;
    bt.n_samples = static_cast<int>(std::floor(t_s / bt.dt));
    bt.power = band_power;
    bt.tau_p = tau_p;
    bt.t_center = 0.5 * tau_p;
    bt.scale = 1.0;
    // Midpoint spectral lines across the aliased extent, pulled in from the
    // band edge by a guard margin so the windowed pulse stays strictly inside
    // the per-band Nyquist rate. Content above the band edge would alias into
    // the sampled correlation and ripple the peak.
    const double margin = 0.05 * w;
    for (int k = 0; k < n_lines; ++k) {
        bt.line_freq.push_back(margin + (k + 0.5) * (w - 2.0 * margin) / n_lines);
        bt.line_amp.push_back(1.0);
    }
    if (band_power > 0.0) {
        double e = 0.0, ed = 0.0;
        for (int n = 0; n < bt.n_samples; ++n) {
            const double g = bt.value(n * bt.dt);
            const double gd = bt.derivative(n * bt.dt);
            e += g * g;
            ed += gd * gd;
        }
        if (!(e > 0.0)) throw std::domain_error("band template has zero energy");
        bt.scale = std::sqrt(band_power / e);
        bt.f_rms = std::sqrt(ed / e);
    } else {
        bt.scale = 0.0;
        bt.f_rms = 0.0;
    }
    return bt;
}

int resolve_threads(int requested) {
    int n = requested;
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) n = 1;
    }
    if (const char* cap = std::getenv("COGRADAR_MAX_THREADS")) {
        const int c = std::atoi(cap);
        if (c >= 1) n = std::min(n, c);
    }
    return n;
}

}  // namespace

std::vector<BandOperatingPoint> McModel::operating(double snr_full) const {
    if (!(snr_full > 0.0)) throw std::domain_error("McModel::operating: snr must be positive");
    const double n0 = noise_density(snr_full);
    std::vector<BandOperatingPoint> out;
    for (const auto& bt : bands) {
        BandOperatingPoint op;
        op.snr = bt.power / (n0 * bt.b);
        op.f_rms = bt.f_rms;
        out.push_back(op);
    }
    return out;
}

double McModel::snr_tilde(double snr_full) const {
    const double n0 = noise_density(snr_full);
    double p = 0.0, b = 0.0;
    for (const auto& bt : bands) {
        p += bt.power;
        b += bt.b;
    }
    return p / (n0 * b);
}

McModel McModel::fullband(double b_h, double p, const McConfig& cfg) {
    cfg.validate();
    if (!(b_h > 0.0)) throw std::domain_error("McModel: b_h must be positive");
    if (p < 0.0) throw std::domain_error("McModel: power must be >= 0");
    McModel m;
    m.b_h = b_h;
    m.reference_power = p;
    m.t_s = cfg.t_s;
    m.tau_p = cfg.pulse_duration > 0.0 ? cfg.pulse_duration : 0.25 * cfg.t_s;
    m.bands.push_back(make_band(0.5 * b_h, p, cfg.t_s, m.tau_p, cfg.bins_per_band));
    return m;
}

McModel McModel::flat_plan(const SubbandPlan& plan, double p_reference, const McConfig& cfg) {
    cfg.validate();
    plan.validate();
    if (!(p_reference > 0.0)) throw std::domain_error("McModel: reference power must be positive");
    McModel m;
    m.b_h = plan.full_band;
    m.reference_power = p_reference;
    m.t_s = cfg.t_s;
    m.tau_p = cfg.pulse_duration > 0.0 ? cfg.pulse_duration : 0.25 * cfg.t_s;
    for (const auto& band : plan.bands) {
        // Flat base magnitude squared is P/B_h, so the band carries
        // beta^2 * (P/B_h) * B_i after the mirror image is counted.
        const double pi = band.beta * band.beta * p_reference * band.two_sided_width() / plan.full_band;
        m.bands.push_back(make_band(band.width, pi, cfg.t_s, m.tau_p, cfg.bins_per_band));
    }
    return m;
}

ReceivedSignal simulate_received(const McModel& model, double tau0, double n0,
                                 RandomStream& rng) {
    if (tau0 < 0.0 || tau0 > model.tau_max() + 1e-12)
        throw std::domain_error("simulate_received: tau0 outside [0, T_s - tau_p]");
    if (n0 < 0.0) throw std::domain_error("simulate_received: noise density must be >= 0");
    ReceivedSignal rx;
    for (const auto& bt : model.bands) {
        std::vector<double> x(bt.n_samples, 0.0);
        if (bt.power > 0.0) {
            const int lo = std::max(0, static_cast<int>(std::ceil(tau0 / bt.dt)) - 1);
            const int hi = std::min(bt.n_samples,
                                    static_cast<int>(std::floor((tau0 + bt.tau_p) / bt.dt)) + 2);
            for (int n = lo; n < hi; ++n) x[n] = bt.value(n * bt.dt - tau0);
        }
        if (n0 > 0.0) {
            const double sigma = std::sqrt(n0 * bt.b);
            for (int n = 0; n < bt.n_samples; ++n) x[n] += sigma * rng.next_gaussian();
        }
        rx.band_samples.push_back(std::move(x));
    }
    return rx;
}

MlDelayEstimator::MlDelayEstimator(const McModel& model, const McConfig& cfg)
    : model_(model), interpolate_(cfg.interpolate_peak) {
    cfg.validate();
    dtau_ = 1.0 / (model.b_h * cfg.tau_grid_oversample);
    n_lags_ = static_cast<int>(std::floor(model.tau_max() / dtau_)) + 1;
    if (n_lags_ < 3) throw std::domain_error("MlDelayEstimator: tau grid too coarse");
    bank_.resize(model.bands.size());
    for (size_t i = 0; i < model.bands.size(); ++i) {
        const auto& bt = model.bands[i];
        bank_[i].resize(n_lags_);
        for (int j = 0; j < n_lags_; ++j) {
            const double tau = j * dtau_;
            BankRow row;
            row.n0 = std::max(0, static_cast<int>(std::ceil(tau / bt.dt)) - 1);
            const int n1 = std::min(bt.n_samples,
                                    static_cast<int>(std::floor((tau + bt.tau_p) / bt.dt)) + 2);
            for (int n = row.n0; n < n1; ++n) row.values.push_back(bt.value(n * bt.dt - tau));
            bank_[i][j] = std::move(row);
        }
    }
}

DelayEstimate MlDelayEstimator::estimate(const ReceivedSignal& rx,
                                         const std::vector<double>& inv_sigma_sq) const {
    if (rx.band_samples.size() != model_.bands.size() ||
        inv_sigma_sq.size() != model_.bands.size())
        throw std::domain_error("estimate: received signal does not match the model");

    std::vector<double> corr(n_lags_, 0.0);
    for (size_t i = 0; i < model_.bands.size(); ++i) {
        const auto& x = rx.band_samples[i];
        const double w = inv_sigma_sq[i];
        for (int j = 0; j < n_lags_; ++j) {
            const auto& row = bank_[i][j];
            double c = 0.0;
            const double* xs = x.data() + row.n0;
            for (size_t n = 0; n < row.values.size(); ++n) c += xs[n] * row.values[n];
            corr[j] += w * c;
        }
    }

    int best = 0;
    for (int j = 1; j < n_lags_; ++j)
        if (corr[j] > corr[best]) best = j;  // strict >: ties go to the smaller tau

    DelayEstimate est;
    bool flat = true;
    for (int j = 1; j < n_lags_ && flat; ++j)
        if (corr[j] != corr[0]) flat = false;
    if (flat) {
        est.degenerate = true;
        est.tau = 0.0;
        return est;
    }

    double tau = grid_tau(best);
    if (interpolate_ && best > 0 && best + 1 < n_lags_) {
        const double ym = corr[best - 1], y0 = corr[best], yp = corr[best + 1];
        const double denom = ym - 2.0 * y0 + yp;
        if (denom < 0.0) {
            const double delta = 0.5 * (ym - yp) / denom;
            if (std::abs(delta) <= 0.5) tau += delta * dtau_;
        }
    }
    est.tau = std::clamp(tau, 0.0, model_.tau_max());
    return est;
}

McSweepResult run_sweep(const McModel& model, const McConfig& cfg) {
    cfg.validate();
    const MlDelayEstimator estimator(model, cfg);
    const double tau_max = model.tau_max();
    const double sigma_tau0_sq = tau_max * tau_max / 12.0;

    McSweepResult result;
    result.sigma_tau0_sq = sigma_tau0_sq;
    result.config_echo = cfg;

    const int n_threads = resolve_threads(cfg.n_threads);

    for (size_t si = 0; si < cfg.snr_grid.size(); ++si) {
        const double snr = cfg.snr_grid[si];
        const double n0 = model.noise_density(snr);
        std::vector<double> inv_sigma_sq;
        for (const auto& bt : model.bands) inv_sigma_sq.push_back(1.0 / (n0 * bt.b));

        std::vector<double> sq_err(cfg.n_trials, 0.0);
        auto run_block = [&](int t0, int t1) {
            for (int t = t0; t < t1; ++t) {
                RandomStream rng(cfg.seed, si, static_cast<std::uint64_t>(t));
                const double tau0 =
                    cfg.fixed_mid_tau0 ? 0.5 * tau_max : tau_max * rng.next_double();
                const auto rx = simulate_received(model, tau0, n0, rng);
                const auto est = estimator.estimate(rx, inv_sigma_sq);
                const double e = est.tau - tau0;
                sq_err[t] = e * e;
            }
        };
        if (n_threads <= 1 || cfg.n_trials < 2 * n_threads) {
            run_block(0, cfg.n_trials);
        } else {
            std::vector<std::thread> pool;
            const int chunk = (cfg.n_trials + n_threads - 1) / n_threads;
            for (int k = 0; k < n_threads; ++k) {
                const int t0 = k * chunk, t1 = std::min(cfg.n_trials, t0 + chunk);
                if (t0 < t1) pool.emplace_back(run_block, t0, t1);
            }
            for (auto& th : pool) th.join();
        }

        McPoint pt;
        pt.snr = snr;
        double sum = 0.0;
        for (double e : sq_err) sum += e;
        pt.mse = sum / cfg.n_trials;

        // Bootstrap 95% CI on the mean, 1000 seeded resamples.
        const int n_boot = 1000;
        std::vector<double> means(n_boot);
        RandomStream brng(cfg.seed ^ 0xb00757a9ull, si, 0);
        for (int b = 0; b < n_boot; ++b) {
            double s = 0.0;
            for (int t = 0; t < cfg.n_trials; ++t) {
                const auto idx = static_cast<size_t>(brng.next_double() * cfg.n_trials);
                s += sq_err[std::min(idx, sq_err.size() - 1)];
            }
            means[b] = s / cfg.n_trials;
        }
        std::sort(means.begin(), means.end());
        pt.ci_lo = std::min(means[24], pt.mse);
        pt.ci_hi = std::max(means[974], pt.mse);

        const auto ops = model.operating(snr);
        pt.crlb = crlb_cognitive(ops);
        pt.ezb = ezb_cognitive(model.snr_tilde(snr), ops, sigma_tau0_sq);
        result.per_snr.push_back(pt);
    }
    return result;
}

}  // namespace cogradar
