#pragma once

#include <map>
#include <string>
#include <vector>

#include "cogradar/spectrum.hpp"

namespace cogradar {

/// Fixed 17-significant-digit decimal formatting used by every CSV/JSON
/// writer, so outputs are reproducible byte for byte.
std::string format_number(double v);

/// REM CSV: header `freq_hz,interference_w_per_hz,excluded`, rows strictly
/// increasing in frequency with uniform spacing (1e-9 relative).
RadarEnvironmentMap load_rem_csv(const std::string& path);
void save_rem_csv(const RadarEnvironmentMap& rem, const std::string& path);

/// Subband plan JSON round-trip.
SubbandPlan load_plan_json(const std::string& path);
void save_plan_json(const SubbandPlan& plan, const std::string& path,
                    const std::vector<int>* start_bins = nullptr,
                    const double* objective = nullptr);

/// Plain `key = value` configuration file; '#' starts a comment.
std::map<std::string, std::string> load_key_value_config(const std::string& path);

/// Write a CSV file: header row then rows of format_number()-formatted cells.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace cogradar
