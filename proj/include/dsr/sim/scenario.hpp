#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/common/math.hpp"
#include "dsr/geometry.hpp"
#include "dsr/overlay.hpp"
#include "dsr/spectral/interference.hpp"
#include "dsr/spectral/ofdm.hpp"

namespace dsr {

enum class Scenario { Baseline, PfNoGsm, Pf, PfFfr };

inline const char* to_string(Scenario s)
{
    switch (s) {
    case Scenario::Baseline:
        return "BASELINE";
    case Scenario::PfNoGsm:
        return "PF_NO_GSM";
    case Scenario::Pf:
        return "PF";
    default:
        return "PF_FFR";
    }
}

inline Scenario parse_scenario(const std::string& name)
{
    for (auto s : {Scenario::Baseline, Scenario::PfNoGsm, Scenario::Pf, Scenario::PfFfr})
        if (name == to_string(s))
            return s;
    throw ConfigError("unknown scenario '" + name + "' (expected BASELINE, PF_NO_GSM, PF or PF_FFR)");
}

inline OverlayMode overlay_mode(Scenario s)
{
    switch (s) {
    case Scenario::Baseline:
        return OverlayMode::NoGsm;
    case Scenario::PfNoGsm:
        return OverlayMode::PunctureNoGsm;
    case Scenario::Pf:
        return OverlayMode::Puncture;
    default:
        return OverlayMode::Ffr;
    }
}

inline bool gsm_transmits(Scenario s) { return s == Scenario::Pf || s == Scenario::PfFfr; }

inline constexpr double kTtiS = 1e-3;

struct ScenarioConfig {
    Scenario mode = Scenario::Pf;
    int ttis = 2000;
    int warmup_ttis = 200;
    int drops = 3;
    double n_t = 1000.0;           ///< PF filter constant, TTIs
    double gsm_offset_db = 13.56;  ///< GSM in-channel PSD over nominal LTE PSD
    double gamma_gap = db_to_linear(3.0);
    double p_max_w = 40.0;
    double gsm_sinr_threshold_db = 10.0;
    bool include_ics = true;
    bool gsm_enabled = true;  ///< false: GSM carriers silent in every mode
    double gsm_traffic_activity = 1.0;  ///< probability a traffic carrier is on in a TTI
    std::uint64_t seed = 1;

    void validate() const
    {
        if (ttis < 1)
            throw ConfigError("ttis must be >= 1");
        if (warmup_ttis < 0 || warmup_ttis >= ttis)
            throw ConfigError("warmup_ttis must lie in [0, ttis)");
        if (drops < 1)
            throw ConfigError("drops must be >= 1");
        if (!(n_t >= 1.0))
            throw ConfigError("n_t must be >= 1");
        if (!(gamma_gap >= 1.0))
            throw ConfigError("shannon gap must be >= 1 (0 dB)");
        if (!(p_max_w > 0.0))
            throw ConfigError("p_max must be positive");
        if (!(gsm_traffic_activity >= 0.0 && gsm_traffic_activity <= 1.0))
            throw ConfigError("gsm_traffic_activity must lie in [0, 1]");
        if (!std::isfinite(gsm_offset_db) || !std::isfinite(gsm_sinr_threshold_db))
            throw ConfigError("GSM levels must be finite");
    }
};

/// Everything a drop needs that does not depend on the scenario.
struct Network {
    HexLayout layout{6, 6, 500.0};
    PropagationModel model{};
    OfdmConfig ofdm{};
    int ues_per_sector = 24;
    double noise_psd_dbm_hz = -174.0;
    std::array<GsmGroup, 4> groups = default_gsm_groups();

    FrequencyPlan plan() const { return build_reuse_plan(layout, groups); }
    PrbGrid prbs() const { return PrbGrid{ofdm}; }
    double noise_psd_w_hz() const { return dbm_to_watt(noise_psd_dbm_hz); }
};

/// Shared GSM footprint; the ICS table is costly, build it once per run.
inline std::shared_ptr<const GsmInterferenceProfile> make_gsm_profile(bool include_ics, const OfdmConfig& ofdm)
{
    return std::make_shared<const GsmInterferenceProfile>(include_ics ? Impairment::Both : Impairment::Leakage,
                                                          GsmLeakageMask{}, ofdm.symbol_time_s);
}

/**
 * Static per-scenario transmit state of every sector: PRB classes and
 * powers, GSM power landing in each PRB (split into BCCH and traffic
 * carrier so the latter can be switched), thermal noise per PRB.
 */
struct CellularState {
    std::vector<std::vector<PrbAssignment>> assign;  ///< [sector][prb]
    std::vector<std::vector<double>> bcch_w;         ///< [sector][prb], at unit gain
    std::vector<std::vector<double>> traffic_w;
    double noise_w = 0.0;
    double p_g_w = 0.0;            ///< GSM power per carrier
    FfrPower ffr{};
};

inline double gsm_carrier_power(const ScenarioConfig& cfg, const OfdmConfig& ofdm)
{
    const double lte_psd = cfg.p_max_w / (ofdm.subcarrier_count * ofdm.subcarrier_spacing_hz);
    return db_to_linear(cfg.gsm_offset_db) * lte_psd * kGsmRasterHz;
}

inline CellularState build_cellular_state(const ScenarioConfig& cfg, const Network& net,
                                          const GsmInterferenceProfile* profile)
{
    cfg.validate();
    const auto plan = net.plan();
    const auto prbs = net.prbs();
    const std::size_t S = net.layout.sector_count(), M = prbs.prb_count();
    CellularState st;
    st.noise_w = net.noise_psd_w_hz() * prbs.prb_bandwidth_hz();
    st.p_g_w = gsm_carrier_power(cfg, net.ofdm);
    if (cfg.mode == Scenario::PfFfr) {
        FfrConfig f;
        f.p_g = st.p_g_w;
        f.gamma = db_to_linear(cfg.gsm_sinr_threshold_db);
        f.n0 = net.noise_psd_w_hz() * kGsmRasterHz;
        f.h = path_gain(net.layout.edge_m(), net.model);
        st.ffr = ffr_low_power(f);
    }
    const auto mode = cfg.mode == Scenario::PfFfr && !st.ffr.enabled ? OverlayMode::Puncture : overlay_mode(cfg.mode);
    st.assign.resize(S);
    for (std::size_t s = 0; s < S; ++s)
        st.assign[s] = classify_prbs(s, plan, prbs, mode, cfg.p_max_w, st.ffr.p_s);

    st.bcch_w.assign(S, std::vector<double>(M, 0.0));
    st.traffic_w = st.bcch_w;
    if (!gsm_transmits(cfg.mode) || !cfg.gsm_enabled)
        return st;
    if (!profile)
        throw ContractViolation("GSM scenarios need an interference profile");
    const double psd = st.p_g_w / kGsmRasterHz;
    auto footprint = [&](const Carrier& c) {
        std::vector<double> w(M);
        for (std::size_t m = 0; m < M; ++m) {
            const auto [lo, hi] = prbs.band(m);
            w[m] = profile->band_power(c.center_hz, psd, lo, hi);
        }
        return w;
    };
    std::map<std::string, std::vector<double>> cache;
    for (const auto& c : plan.all_carriers())
        cache.emplace(c.name(), footprint(c));
    for (std::size_t s = 0; s < S; ++s) {
        st.bcch_w[s] = cache.at(plan.sector(s).bcch.name());
        st.traffic_w[s] = cache.at(plan.sector(s).traffic.name());
    }
    return st;
}

/**
 * Linear SINR of a UE on PRB m of its serving sector. traffic_on masks
 * the traffic carrier per sector (nullptr: all on).
 */
inline double per_prb_sinr(const LinkTable& link, std::size_t m, const CellularState& st,
                           const std::vector<char>* traffic_on = nullptr)
{
    const auto serving = link.serving;
    const auto& own = st.assign.at(serving).at(m);
    if (own.cls == PrbClass::Reserved)
        throw DomainError("PRB " + std::to_string(m) + " is reserved in the serving sector");
    double interf = st.noise_w;
    for (std::size_t s = 0; s < link.gain.size(); ++s) {
        const double g = link.gain[s];
        if (s != serving)
            interf += st.assign[s][m].power_w * g;
        double gsm = st.bcch_w[s][m];
        if (!traffic_on || (*traffic_on)[s])
            gsm += st.traffic_w[s][m];
        interf += gsm * g;
    }
    return own.power_w * link.gain[serving] / interf;
}

inline double shannon_rate(double sinr, double gamma_gap, double bandwidth_hz)
{
    if (!(sinr >= 0.0))
        throw DomainError("negative SINR");
    return bandwidth_hz * std::log2(1.0 + sinr / gamma_gap);
}

} // namespace dsr
