#pragma once

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/power/build.hpp"
#include "dsr/sim/scenario.hpp"

namespace dsr {

/// Resolved settings of one run; every field has a default.
struct ExperimentConfig {
    int grid_rows = 6;
    int grid_cols = 6;
    double cell_edge_m = 500.0;
    int sectors_per_cell = 3;
    int ues_per_sector = 24;
    double p_max_w = 40.0;
    double noise_psd_dbm_hz = -174.0;
    double wavelength_m = 0.375;
    double path_loss_exponent = 3.0;
    double shadowing_var_db2 = 36.0;
    double bandwidth_mhz = 10.0;
    int prb_count = 50;
    double subcarrier_spacing_khz = 15.0;
    double gsm_offset_db = 13.56;
    double gsm_carrier_khz = 200.0;
    double gsm_sinr_threshold_db = 10.0;
    double shannon_gap_db = 3.0;
    bool gsm_enabled = true;
    bool include_ics = true;
    double gsm_traffic_activity = 1.0;

    int ttis = 2000;
    int warmup_ttis = 200;
    int drops = 3;
    double pf_filter_ttis = 1000.0;
    std::uint64_t seed = 1;
    int threads = 1;
    std::vector<Scenario> scenarios{Scenario::Baseline, Scenario::PfNoGsm, Scenario::Pf, Scenario::PfFfr};
    std::string output_dir = "out";

    double power_snr_db = 10.0;
    double mask_level_db = -15.0;
    int guard_subcarriers = 0;
    ConstraintSet constraint_set = ConstraintSet::ChannelCenters;
    Impairment impairment = Impairment::Both;
    std::vector<double> sweep_snr_db{0, 5, 10, 15, 20, 25, 30};

    bool operator==(const ExperimentConfig&) const = default;
};

namespace detail {

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (auto t = trim(item); !t.empty())
            out.push_back(t);
    return out;
}

inline double parse_double(const std::string& v)
{
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (v.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(x))
        throw ConfigError("expected a finite number, got '" + v + "'");
    return x;
}

inline long long parse_int(const std::string& v)
{
    errno = 0;
    char* end = nullptr;
    const long long x = std::strtoll(v.c_str(), &end, 10);
    if (v.empty() || *end != '\0' || errno == ERANGE)
        throw ConfigError("expected an integer, got '" + v + "'");
    return x;
}

inline int parse_int32(const std::string& v)
{
    const auto x = parse_int(v);
    if (x < INT32_MIN || x > INT32_MAX)
        throw ConfigError("integer out of range: '" + v + "'");
    return static_cast<int>(x);
}

inline bool parse_bool(const std::string& v)
{
    if (v == "true" || v == "1")
        return true;
    if (v == "false" || v == "0")
        return false;
    throw ConfigError("expected true or false, got '" + v + "'");
}

inline std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline const char* to_string(ConstraintSet c) { return c == ConstraintSet::ChannelCenters ? "centers" : "edges"; }

inline const char* to_string(Impairment i)
{
    switch (i) {
    case Impairment::None:
        return "none";
    case Impairment::Leakage:
        return "leakage";
    case Impairment::Ics:
        return "ics";
    default:
        return "both";
    }
}

struct Field {
    const char* key;
    std::function<void(ExperimentConfig&, const std::string&)> parse;
    std::function<std::string(const ExperimentConfig&)> format;
    std::function<const char*(const ExperimentConfig&)> check;  ///< nullptr when valid
};

#define DSR_NUM(name, parser, cond, msg)                                                                          \
    Field{#name, [](ExperimentConfig& c, const std::string& v) { c.name = parser(v); },                           \
          [](const ExperimentConfig& c) { return fmt(static_cast<double>(c.name)); },                             \
          []([[maybe_unused]] const ExperimentConfig& c) -> const char* { return (cond) ? nullptr : msg; }}
#define DSR_BOOL(name)                                                                                            \
    Field{#name, [](ExperimentConfig& c, const std::string& v) { c.name = parse_bool(v); },                       \
          [](const ExperimentConfig& c) { return std::string(c.name ? "true" : "false"); },                       \
          [](const ExperimentConfig&) -> const char* { return nullptr; }}

inline const std::vector<Field>& fields()
{
    static const std::vector<Field> f{
        DSR_NUM(grid_rows, parse_int32, c.grid_rows >= 1, "must be >= 1"),
        DSR_NUM(grid_cols, parse_int32, c.grid_cols >= 1, "must be >= 1"),
        DSR_NUM(cell_edge_m, parse_double, c.cell_edge_m > 0, "must be positive"),
        DSR_NUM(sectors_per_cell, parse_int32, c.sectors_per_cell == 3, "must be 3 (the reuse plan is tri-sector)"),
        DSR_NUM(ues_per_sector, parse_int32, c.ues_per_sector >= 1, "must be >= 1"),
        DSR_NUM(p_max_w, parse_double, c.p_max_w > 0, "must be positive"),
        DSR_NUM(noise_psd_dbm_hz, parse_double, true, ""),
        DSR_NUM(wavelength_m, parse_double, c.wavelength_m > 0, "must be positive"),
        DSR_NUM(path_loss_exponent, parse_double, c.path_loss_exponent > 2, "must exceed 2"),
        DSR_NUM(shadowing_var_db2, parse_double, c.shadowing_var_db2 >= 0, "must be >= 0"),
        DSR_NUM(bandwidth_mhz, parse_double, c.bandwidth_mhz == 10.0, "must be 10 (only the 10 MHz carrier is modelled)"),
        DSR_NUM(prb_count, parse_int32,
                c.prb_count >= (c.gsm_enabled ? 46 : 1) && c.prb_count * 0.18 <= 0.9 * c.bandwidth_mhz + 1e-9,
                "must lie in [1, 50] for a 10 MHz carrier, and be >= 46 to hold the GSM carriers"),
        DSR_NUM(subcarrier_spacing_khz, parse_double, c.subcarrier_spacing_khz == 15.0, "must be 15"),
        DSR_NUM(gsm_offset_db, parse_double, true, ""),
        DSR_NUM(gsm_carrier_khz, parse_double, c.gsm_carrier_khz == 200.0, "must be 200"),
        DSR_NUM(gsm_sinr_threshold_db, parse_double, true, ""),
        DSR_NUM(shannon_gap_db, parse_double, c.shannon_gap_db >= 0, "must be >= 0 dB"),
        DSR_BOOL(gsm_enabled),
        DSR_BOOL(include_ics),
        DSR_NUM(gsm_traffic_activity, parse_double, c.gsm_traffic_activity >= 0 && c.gsm_traffic_activity <= 1,
                "must lie in [0, 1]"),
        DSR_NUM(ttis, parse_int32, c.ttis >= 1, "must be >= 1"),
        DSR_NUM(warmup_ttis, parse_int32, c.warmup_ttis >= 0 && c.warmup_ttis < c.ttis, "must lie in [0, ttis)"),
        DSR_NUM(drops, parse_int32, c.drops >= 1, "must be >= 1"),
        DSR_NUM(pf_filter_ttis, parse_double, c.pf_filter_ttis >= 1, "must be >= 1"),
        Field{"seed",
              [](ExperimentConfig& c, const std::string& v) {
                  const auto x = parse_int(v);
                  if (x < 0)
                      throw ConfigError("expected a non-negative integer, got '" + v + "'");
                  c.seed = static_cast<std::uint64_t>(x);
              },
              [](const ExperimentConfig& c) { return std::to_string(c.seed); },
              [](const ExperimentConfig&) -> const char* { return nullptr; }},
        DSR_NUM(threads, parse_int32, c.threads >= 0, "must be >= 0 (0: one per hardware thread)"),
        Field{"scenarios",
              [](ExperimentConfig& c, const std::string& v) {
                  c.scenarios.clear();
                  for (const auto& s : split_list(v))
                      c.scenarios.push_back(parse_scenario(s));
              },
              [](const ExperimentConfig& c) {
                  std::string s;
                  for (auto x : c.scenarios)
                      s += (s.empty() ? "" : ",") + std::string(dsr::to_string(x));
                  return s;
              },
              [](const ExperimentConfig& c) -> const char* {
                  if (c.scenarios.empty())
                      return "must name at least one scenario";
                  std::set<Scenario> u(c.scenarios.begin(), c.scenarios.end());
                  return u.size() == c.scenarios.size() ? nullptr : "must not repeat a scenario";
              }},
        Field{"output_dir", [](ExperimentConfig& c, const std::string& v) { c.output_dir = v; },
              [](const ExperimentConfig& c) { return c.output_dir; },
              [](const ExperimentConfig& c) -> const char* { return c.output_dir.empty() ? "must not be empty" : nullptr; }},
        DSR_NUM(power_snr_db, parse_double, true, ""),
        DSR_NUM(mask_level_db, parse_double, c.mask_level_db <= 0, "must be <= 0 dB"),
        DSR_NUM(guard_subcarriers, parse_int32, c.guard_subcarriers >= 0 && c.guard_subcarriers <= 20,
                "must lie in [0, 20]"),
        Field{"constraint_set",
              [](ExperimentConfig& c, const std::string& v) {
                  if (v == "centers")
                      c.constraint_set = ConstraintSet::ChannelCenters;
                  else if (v == "edges")
                      c.constraint_set = ConstraintSet::GroupEdges;
                  else
                      throw ConfigError("expected centers or edges, got '" + v + "'");
              },
              [](const ExperimentConfig& c) { return std::string(to_string(c.constraint_set)); },
              [](const ExperimentConfig&) -> const char* { return nullptr; }},
        Field{"impairment",
              [](ExperimentConfig& c, const std::string& v) {
                  for (auto i : {Impairment::None, Impairment::Leakage, Impairment::Ics, Impairment::Both})
                      if (v == to_string(i)) {
                          c.impairment = i;
                          return;
                      }
                  throw ConfigError("expected none, leakage, ics or both, got '" + v + "'");
              },
              [](const ExperimentConfig& c) { return std::string(to_string(c.impairment)); },
              [](const ExperimentConfig&) -> const char* { return nullptr; }},
        Field{"sweep_snr_db",
              [](ExperimentConfig& c, const std::string& v) {
                  c.sweep_snr_db.clear();
                  for (const auto& s : split_list(v))
                      c.sweep_snr_db.push_back(parse_double(s));
              },
              [](const ExperimentConfig& c) {
                  std::string s;
                  for (double x : c.sweep_snr_db)
                      s += (s.empty() ? "" : ",") + fmt(x);
                  return s;
              },
              [](const ExperimentConfig& c) -> const char* {
                  return c.sweep_snr_db.empty() ? "must list at least one SNR" : nullptr;
              }},
    };
    return f;
}

#undef DSR_NUM
#undef DSR_BOOL

} // namespace detail

/// Range checks; lines maps keys to the line they were set on, for diagnostics.
inline void validate(const ExperimentConfig& c, const std::map<std::string, int>& lines = {})
{
    for (const auto& f : detail::fields())
        if (const char* msg = f.check(c)) {
            const auto it = lines.find(f.key);
            const std::string where = it == lines.end() ? "" : "line " + std::to_string(it->second) + ": ";
            throw ConfigError(where + f.key + " " + msg);
        }
}

/// Flat `key = value` text, `#` starts a comment. Missing keys keep defaults.
inline ExperimentConfig parse_config(std::istream& in, const std::string& source = "config")
{
    ExperimentConfig c;
    std::map<std::string, int> lines;
    std::string raw;
    for (int n = 1; std::getline(in, raw); ++n) {
        const auto line = detail::trim(raw.substr(0, raw.find('#')));
        if (line.empty())
            continue;
        const auto where = source + ":" + std::to_string(n) + ": ";
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + "expected 'key = value'");
        const auto key = detail::trim(line.substr(0, eq));
        const auto value = detail::trim(line.substr(eq + 1));
        const auto& fs = detail::fields();
        const auto it = std::find_if(fs.begin(), fs.end(), [&](const detail::Field& f) { return key == f.key; });
        if (it == fs.end())
            throw ConfigError(where + "unknown key '" + key + "'");
        if (lines.count(key))
            throw ConfigError(where + "duplicate key '" + key + "' (first set on line " + std::to_string(lines[key]) + ")");
        lines[key] = n;
        try {
            it->parse(c, value);
        } catch (const ConfigError& e) {
            throw ConfigError(where + key + ": " + e.what());
        }
    }
    try {
        validate(c, lines);
    } catch (const ConfigError& e) {
        throw ConfigError(source + ":" + e.what());
    }
    return c;
}

inline ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

/// Every key with its resolved value; parse_config of this text gives c back.
inline void write_config(std::ostream& os, const ExperimentConfig& c)
{
    os << "# resolved configuration\n";
    for (const auto& f : detail::fields())
        os << f.key << " = " << f.format(c) << '\n';
}

inline Network make_network(const ExperimentConfig& c)
{
    Network n;
    n.layout = HexLayout(c.grid_rows, c.grid_cols, c.cell_edge_m, c.sectors_per_cell);
    n.model.alpha = c.path_loss_exponent;
    n.model.wavelength_m = c.wavelength_m;
    n.model.shadow_var_db2 = c.shadowing_var_db2;
    n.ofdm.subcarrier_count = 12 * c.prb_count;
    n.ues_per_sector = c.ues_per_sector;
    n.noise_psd_dbm_hz = c.noise_psd_dbm_hz;
    return n;
}

inline ScenarioConfig make_scenario(const ExperimentConfig& c, Scenario s)
{
    ScenarioConfig sc;
    sc.mode = s;
    sc.ttis = c.ttis;
    sc.warmup_ttis = c.warmup_ttis;
    sc.drops = c.drops;
    sc.n_t = c.pf_filter_ttis;
    sc.gsm_offset_db = c.gsm_offset_db;
    sc.gamma_gap = db_to_linear(c.shannon_gap_db);
    sc.p_max_w = c.p_max_w;
    sc.gsm_sinr_threshold_db = c.gsm_sinr_threshold_db;
    sc.include_ics = c.include_ics;
    sc.gsm_enabled = c.gsm_enabled;
    sc.gsm_traffic_activity = c.gsm_traffic_activity;
    sc.seed = c.seed;
    return sc;
}

inline ProblemSpec make_problem_spec(const ExperimentConfig& c, const OfdmConfig& ofdm)
{
    ProblemSpec p;
    p.gsm_offset_db = c.gsm_offset_db;
    p.p_max = c.p_max_w;
    p.thermal_noise_w = c.p_max_w / (ofdm.subcarrier_count * db_to_linear(c.power_snr_db));
    p.mask_level_db = c.mask_level_db;
    p.constraint_set = c.constraint_set;
    p.impairment = c.impairment;
    return p;
}

} // namespace dsr
