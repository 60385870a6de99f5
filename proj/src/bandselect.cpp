#include "cogradar/bandselect.hpp"

#include <algorithm>
#include <limits>

namespace cogradar {

void SelectionConstraints::validate() const {
    if (n_bands < 1) throw std::domain_error("SelectionConstraints: n_bands must be >= 1");
    if (widths_bins.empty())
        throw std::domain_error("SelectionConstraints: widths_bins must not be empty");
    if (widths_bins.size() != 1 && widths_bins.size() != static_cast<size_t>(n_bands))
        throw std::domain_error("SelectionConstraints: widths_bins must have 1 or n_bands entries");
    for (int w : widths_bins)
        if (w < 1) throw std::domain_error("SelectionConstraints: block widths must be >= 1 bin");
    if (min_separation_bins < 0)
        throw std::domain_error("SelectionConstraints: min_separation_bins must be >= 0");
    if (fidelity_xi < 0.0)
        throw std::domain_error("SelectionConstraints: fidelity_xi must be >= 0");
}

namespace {

// Bin k is a cell covering [f_lo + k*d, f_lo + (k+1)*d); a block of w bins
// starting at s maps to a Subband of width w*d centered mid-block.
Subband block_to_subband(const FrequencyGrid& g, int start, int w) {
    const double d = g.spacing();
    Subband b;
    b.width = w * d;
    b.f_center = g.f_lo + (start + 0.5 * w) * d;
    b.beta = 1.0;
    return b;
}

struct Workspace {
    const RadarEnvironmentMap& rem;
    std::vector<double> prefix;  // prefix[k] = sum of interference[0..k)
    std::vector<bool> blocked;   // excluded or already consumed

    explicit Workspace(const RadarEnvironmentMap& r) : rem(r) {
        const int m = r.grid.m_points;
        prefix.assign(m + 1, 0.0);
        for (int k = 0; k < m; ++k) prefix[k + 1] = prefix[k] + r.interference[k];
        blocked.assign(r.excluded.begin(), r.excluded.end());
    }

    double block_energy(int s, int w) const {
        return (prefix[s + w] - prefix[s]) * rem.grid.spacing();
    }

    bool admissible(int s, int w) const {
        if (s < 0 || s + w > rem.grid.m_points) return false;
        for (int k = s; k < s + w; ++k)
            if (blocked[k]) return false;
        return true;
    }
};

void feasibility_precheck(const RadarEnvironmentMap& rem, const SelectionConstraints& c) {
    int need = (c.n_bands - 1) * c.min_separation_bins;
    for (int i = 0; i < c.n_bands; ++i) need += c.width(i);
    int admissible = 0;
    for (bool e : rem.excluded)
        if (!e) ++admissible;
    if (need > admissible)
        throw constraint_error("band selection infeasible: blocks plus separation exceed admissible bins");
}

SelectionResult finalize(const RadarEnvironmentMap& rem, const SelectionConstraints& c,
                         std::vector<int> starts, double objective, SelectionMethod method) {
    std::vector<std::pair<int, int>> placed;  // (start, width)
    for (int i = 0; i < c.n_bands; ++i) placed.emplace_back(starts[i], c.width(i));
    std::sort(placed.begin(), placed.end());
    SelectionResult r;
    r.method = method;
    r.objective = objective;
    for (auto [s, w] : placed) {
        r.start_bins.push_back(s);
        r.bands.push_back(block_to_subband(rem.grid, s, w));
    }
    return r;
}

}  // namespace

SelectionResult select_bands_oracle(const RadarEnvironmentMap& rem,
                                    const SelectionConstraints& c) {
    rem.validate();
    c.validate();
    if (rem.grid.m_points > 256 || c.n_bands > 4)
        throw size_error("select_bands_oracle: beyond the exhaustive-search guard (256 bins, 4 bands); use the greedy solver");
    feasibility_precheck(rem, c);

    Workspace ws(rem);
    const int m = rem.grid.m_points;

    std::vector<int> starts(c.n_bands, -1);
    std::vector<int> best_starts;
    double best = std::numeric_limits<double>::infinity();

    // Depth-first over ascending start positions; enumeration order is
    // lexicographic in the start tuple, so keeping strictly-better solutions
    // realizes the lowest-tuple tie-break.
    auto place = [&](auto&& self, int i, int min_start, double acc) -> void {
        if (i == c.n_bands) {
            if (acc < best) {
                best = acc;
                best_starts = starts;
            }
            return;
        }
        const int w = c.width(i);
        for (int s = min_start; s + w <= m; ++s) {
            if (!ws.admissible(s, w)) continue;
            starts[i] = s;
            self(self, i + 1, s + w + c.min_separation_bins, acc + ws.block_energy(s, w));
        }
    };
    place(place, 0, 0, 0.0);

    if (best_starts.empty())
        throw constraint_error("select_bands_oracle: no feasible placement");
    return finalize(rem, c, best_starts, best, SelectionMethod::oracle);
}

SelectionResult select_bands_greedy(const RadarEnvironmentMap& rem,
                                    const SelectionConstraints& c) {
    rem.validate();
    c.validate();
    feasibility_precheck(rem, c);

    Workspace ws(rem);
    const int m = rem.grid.m_points;

    std::vector<int> starts;
    double objective = 0.0;
    for (int i = 0; i < c.n_bands; ++i) {
        const int w = c.width(i);
        int best_s = -1;
        double best_e = std::numeric_limits<double>::infinity();
        for (int s = 0; s + w <= m; ++s) {
            if (!ws.admissible(s, w)) continue;
            const double e = ws.block_energy(s, w);
            if (e < best_e) {
                best_e = e;
                best_s = s;
            }
        }
        if (best_s < 0)
            throw constraint_error("select_bands_greedy: no admissible position left");
        starts.push_back(best_s);
        objective += best_e;
        const int lo = std::max(0, best_s - c.min_separation_bins);
        const int hi = std::min(m, best_s + w + c.min_separation_bins);
        for (int k = lo; k < hi; ++k) ws.blocked[k] = true;
    }
    return finalize(rem, c, starts, objective, SelectionMethod::greedy);
}

}  // namespace cogradar
