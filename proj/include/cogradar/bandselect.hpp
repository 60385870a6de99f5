#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cogradar/spectrum.hpp"

namespace cogradar {

/// Constraints for placing N_b disjoint blocks on the REM grid.
///
/// Widths are in bins. `min_separation` is the number of free bins required
/// between consecutive blocks. `fidelity_xi` is accepted and stored for the
/// block-sparse residual formulation but unused by the energy-objective
/// solvers.
struct SelectionConstraints {
    int n_bands = 1;
    std::vector<int> widths_bins;  // size 1 = same width for every block
    int min_separation_bins = 0;
    double fidelity_xi = 0.0;

    void validate() const;
    /// Width of block i after broadcasting a single entry to all blocks.
    int width(int i) const {
        return widths_bins.size() == 1 ? widths_bins[0] : widths_bins.at(i);
    }
};

enum class SelectionMethod { oracle, greedy };

struct SelectionResult {
    std::vector<Subband> bands;    // beta left at 1
    std::vector<int> start_bins;   // one per band, ascending
    double objective = 0.0;        // total in-band interference energy, W
    SelectionMethod method = SelectionMethod::oracle;
};

/// Globally optimal placement minimizing total in-band interference energy
/// (sum of interference[k] * spacing over covered bins), by exhaustive
/// enumeration of ordered block placements. Ties break toward the
/// lexicographically smallest start-bin tuple.
///
/// Guarded: at most 256 bins and 4 blocks; beyond that a size_error directs
/// the caller to the greedy solver.
SelectionResult select_bands_oracle(const RadarEnvironmentMap& rem,
                                    const SelectionConstraints& c);

/// Greedy solver: repeatedly place the next block (widths taken in the given
/// order) at the admissible position of least interference energy, then mark
/// it and its separation margin unavailable. Exact for a single block.
SelectionResult select_bands_greedy(const RadarEnvironmentMap& rem,
                                    const SelectionConstraints& c);

}  // namespace cogradar
