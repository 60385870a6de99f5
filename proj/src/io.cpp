#include "cogradar/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cogradar {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

RadarEnvironmentMap load_rem_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open REM file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty REM file: " + path);
    if (trim(line) != "freq_hz,interference_w_per_hz,excluded")
        throw std::runtime_error("REM file has an unexpected header: " + path);

    std::vector<double> freq, interf;
    std::vector<bool> excl;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 3)
            throw std::runtime_error("REM row " + std::to_string(lineno) + ": expected 3 columns");
        try {
            freq.push_back(std::stod(cells[0]));
            interf.push_back(std::stod(cells[1]));
            const int e = std::stoi(cells[2]);
            if (e != 0 && e != 1) throw std::invalid_argument("excluded flag");
            excl.push_back(e == 1);
        } catch (const std::exception&) {
            throw std::runtime_error("REM row " + std::to_string(lineno) + ": parse error");
        }
    }
    if (freq.size() < 2) throw std::runtime_error("REM file needs at least 2 rows");

    const double d0 = freq[1] - freq[0];
    if (!(d0 > 0.0)) throw std::runtime_error("REM frequencies must be strictly increasing");
    for (size_t i = 1; i < freq.size(); ++i) {
        const double d = freq[i] - freq[i - 1];
        if (!(d > 0.0)) throw std::runtime_error("REM frequencies must be strictly increasing");
        if (std::abs(d - d0) > 1e-9 * std::abs(d0))
            throw std::runtime_error("REM frequency spacing is not uniform");
    }

    RadarEnvironmentMap rem;
    rem.grid = FrequencyGrid(freq.front(), freq.back(), static_cast<int>(freq.size()));
    rem.interference = std::move(interf);
    rem.excluded = std::move(excl);
    rem.validate();
    return rem;
}

void save_rem_csv(const RadarEnvironmentMap& rem, const std::string& path) {
    rem.validate();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write REM file: " + path);
    out << "freq_hz,interference_w_per_hz,excluded\n";
    for (int k = 0; k < rem.grid.m_points; ++k)
        out << format_number(rem.grid.freq(k)) << ',' << format_number(rem.interference[k]) << ','
            << (rem.excluded[k] ? 1 : 0) << '\n';
}

SubbandPlan load_plan_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open plan file: " + path);
    nlohmann::json j;
    in >> j;
    SubbandPlan plan;
    plan.full_band = j.at("b_h_hz").get<double>();
    plan.total_power = j.at("total_power_w").get<double>();
    plan.noise_density = j.at("noise_density_w_per_hz").get<double>();
    for (const auto& jb : j.at("bands")) {
        Subband b;
        b.f_center = jb.at("f_center_hz").get<double>();
        b.width = jb.at("width_hz").get<double>();
        b.beta = jb.at("beta").get<double>();
        plan.bands.push_back(b);
    }
    plan.validate();
    return plan;
}

void save_plan_json(const SubbandPlan& plan, const std::string& path,
                    const std::vector<int>* start_bins, const double* objective) {
    plan.validate();
    nlohmann::ordered_json j;
    j["b_h_hz"] = plan.full_band;
    j["total_power_w"] = plan.total_power;
    j["noise_density_w_per_hz"] = plan.noise_density;
    j["bands"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < plan.bands.size(); ++i) {
        nlohmann::ordered_json jb;
        jb["f_center_hz"] = plan.bands[i].f_center;
        jb["width_hz"] = plan.bands[i].width;
        jb["beta"] = plan.bands[i].beta;
        if (start_bins && i < start_bins->size()) jb["start_bin"] = (*start_bins)[i];
        j["bands"].push_back(jb);
    }
    if (objective) j["selection_objective_w"] = *objective;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write plan file: " + path);
    out << j.dump(2) << '\n';
}

std::map<std::string, std::string> load_key_value_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw std::runtime_error("config line " + std::to_string(lineno) +
                                                  ": empty key");
        kv[key] = val;
    }
    return kv;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV file: " + path);
    for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
}

}  // namespace cogradar
