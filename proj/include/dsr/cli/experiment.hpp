#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "dsr/cli/config.hpp"
#include "dsr/power.hpp"
#include "dsr/sim.hpp"
#include "dsr/spectral.hpp"

namespace dsr {

namespace fs = std::filesystem;

inline std::ofstream open_output(const fs::path& p)
{
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + p.string());
    return out;
}

struct ScenarioResult {
    Scenario scenario;
    RateStats stats;
};

/// scenario,mean_bps,top5_bps,bottom5_bps,pct_of_baseline (NA without a BASELINE row).
inline void write_summary_csv(std::ostream& os, const std::vector<ScenarioResult>& rs)
{
    double base = -1.0;
    for (const auto& r : rs)
        if (r.scenario == Scenario::Baseline)
            base = r.stats.mean;
    os << "scenario,mean_bps,top5_bps,bottom5_bps,pct_of_baseline\n";
    char buf[200];
    for (const auto& r : rs) {
        std::snprintf(buf, sizeof buf, "%s,%.6f,%.6f,%.6f,", to_string(r.scenario), r.stats.mean, r.stats.top5,
                      r.stats.bottom5);
        os << buf;
        if (base > 0) {
            std::snprintf(buf, sizeof buf, "%.4f\n", 100.0 * r.stats.mean / base);
            os << buf;
        } else {
            os << "NA\n";
        }
    }
}

inline unsigned resolve_threads(int n)
{
    if (n > 0)
        return static_cast<unsigned>(n);
    return std::max(1u, std::thread::hardware_concurrency());
}

struct PowerRun {
    PuncturePlan plan;
    AllocationProblem problem;
    PowerAllocation appendix;
    PowerAllocation oracle;
    std::vector<RatePoint> sweep;
};

inline std::vector<GsmChannel> configured_channels(const ExperimentConfig& c)
{
    return c.gsm_enabled ? default_gsm_channels(c.gsm_offset_db) : std::vector<GsmChannel>{};
}

/// LTE PSD of the chosen allocation and the virtual GSM PSD, both on a 1 kHz grid over +-6 MHz.
inline void write_psd_outputs(const fs::path& dir, const PowerRun& r, const ExperimentConfig& c)
{
    const auto& ofdm = r.plan.config();
    const FrequencyGrid grid(-6e6, 6e6, 1e3);
    const auto& best = r.appendix.feasible ? r.appendix : r.oracle;
    auto out = open_output(dir / "lte_psd.csv");
    lte_psd(best.powers, ofdm, r.plan, grid).write_csv(out);

    std::vector<double> v(grid.size(), 0.0);
    auto gout = open_output(dir / "gsm_virtual_psd.csv");
    if (r.plan.gsm_channels().empty()) {
        SpectralDensity(grid, std::move(v)).write_csv(gout);
        return;
    }
    const GsmInterferenceProfile prof(c.impairment == Impairment::None ? Impairment::Both : c.impairment,
                                      GsmLeakageMask{}, ofdm.symbol_time_s);
    const double psd = reference_lte_psd(ofdm, c.p_max_w) * db_to_linear(c.gsm_offset_db);
    for (std::size_t j = 0; j < grid.size(); ++j)
        for (const auto& g : r.plan.gsm_channels()) {
            const double f = grid.frequency(j);
            v[j] += prof.profile() ? psd * prof.profile()->value_at(f - g.center_hz)
                                   : gsm_emission_at(f, GsmEmitter{g.center_hz, psd}, GsmLeakageMask{});
        }
    SpectralDensity(grid, std::move(v)).write_csv(gout);
}

/**
 * The single-link allocation study: problem on the configured puncture
 * plan, both solvers, their allocations and PSDs and, with sweep, the
 * rate-versus-SNR curves.
 */
inline PowerRun run_power(const ExperimentConfig& c, const fs::path& dir, bool sweep, std::ostream& log)
{
    validate(c);
    OfdmConfig ofdm;
    ofdm.subcarrier_count = 12 * c.prb_count;
    auto plan = PuncturePlan::from_gsm_channels(ofdm, configured_channels(c), c.guard_subcarriers);
    const auto spec = make_problem_spec(c, ofdm);
    auto prob = build_problem(plan, spec);
    PowerRun r{plan, prob, solve_appendix(prob), solve_oracle(prob), {}};

    {
        auto a = open_output(dir / "allocation_appendix.csv");
        write_allocation_csv(a, plan.lte_set(), prob.noise, r.appendix);
        auto o = open_output(dir / "allocation_oracle.csv");
        write_allocation_csv(o, plan.lte_set(), prob.noise, r.oracle);
        auto s = open_output(dir / "allocation_summary.txt");
        s << "[appendix]\n";
        write_allocation_summary(s, r.appendix);
        s << "\n[oracle]\n";
        write_allocation_summary(s, r.oracle);
    }
    if (!r.appendix.feasible)
        log << "power: appendix pick violates the mask; oracle allocation written alongside\n";
    char buf[200];
    std::snprintf(buf, sizeof buf, "power: N=%zu rows=%zu appendix=%.9g nats (%s) oracle=%.9g nats\n", prob.size(),
                  prob.constraints.size(), r.appendix.objective, r.appendix.feasible ? "feasible" : "infeasible",
                  r.oracle.objective);
    log << buf;
    write_psd_outputs(dir, r, c);
    if (sweep) {
        r.sweep = rate_vs_snr(plan, spec, c.sweep_snr_db);
        auto w = open_output(dir / "rate_sweep.csv");
        write_rate_sweep_csv(w, r.sweep);
    }
    return r;
}

/// Runs every configured scenario and writes the per-scenario CSVs plus summary.csv.
inline std::vector<ScenarioResult> run_experiment(const ExperimentConfig& c, bool emit_psd, std::ostream& log)
{
    validate(c);
    const fs::path dir = c.output_dir;
    {
        auto echo = open_output(dir / "config.resolved");
        write_config(echo, c);
    }
    const auto net = make_network(c);
    const auto plan = net.plan();
    const auto prbs = net.prbs();

    std::shared_ptr<const GsmInterferenceProfile> profile;
    for (auto s : c.scenarios)
        if (gsm_transmits(s) && c.gsm_enabled && !profile)
            profile = make_gsm_profile(c.include_ics, net.ofdm);

    for (int d = 0; d < c.drops; ++d) {
        const auto drop = drop_ues(net.layout, net.ues_per_sector, net.model, drop_seed(c.seed, d));
        auto out = open_output(dir / "drops" / ("drop_" + std::to_string(d) + ".csv"));
        write_drop_csv(out, drop, net.layout, net.model);
    }

    std::vector<ScenarioResult> results;
    for (auto s : c.scenarios) {
        const auto sc = make_scenario(c, s);
        const auto st = build_cellular_state(sc, net, profile.get());
        auto stats = aggregate(run_drops(sc, net, st, resolve_threads(c.threads)));
        const fs::path sd = dir / to_string(s);
        auto u = open_output(sd / "ue_throughput.csv");
        write_ue_throughput_csv(u, stats);
        auto f = open_output(sd / "cdf.csv");
        write_cdf_csv(f, stats);
        auto p = open_output(sd / "prb_alloc.csv");
        write_prb_alloc_csv(p, stats);
        auto pl = open_output(sd / "plan.csv");
        write_plan_csv(pl, plan, prbs, overlay_mode(s), c.p_max_w, st.ffr.p_s);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: %zu UEs, mean %.4f Mbit/s, top5 %.4f, bottom5 %.4f\n", to_string(s),
                      stats.ranked.size(), stats.mean / 1e6, stats.top5 / 1e6, stats.bottom5 / 1e6);
        log << buf;
        results.push_back({s, std::move(stats)});
    }
    auto sum = open_output(dir / "summary.csv");
    write_summary_csv(sum, results);
    if (emit_psd)
        run_power(c, dir / "power", false, log);
    return results;
}

/// Plan checks: protected region, PRB accounting, reuse plan export. Returns validity.
inline bool run_validate_plan(const ExperimentConfig& c, std::ostream& log)
{
    validate(c);
    const auto net = make_network(c);
    const auto prbs = net.prbs();
    const auto pp = PuncturePlan::from_gsm_channels(net.ofdm, configured_channels(c), c.guard_subcarriers);
    const auto report = validate_puncture_plan(pp, prbs);
    const auto acct = partial_prb_accounting(pp, prbs);
    const fs::path dir = c.output_dir;
    const auto plan = net.plan();
    {
        auto out = open_output(dir / "plan.csv");
        FfrConfig f;
        f.p_g = gsm_carrier_power(make_scenario(c, Scenario::PfFfr), net.ofdm);
        f.gamma = db_to_linear(c.gsm_sinr_threshold_db);
        f.n0 = net.noise_psd_w_hz() * kGsmRasterHz;
        f.h = path_gain(c.cell_edge_m, net.model);
        write_plan_csv(out, plan, prbs, OverlayMode::Ffr, c.p_max_w, ffr_low_power(f).p_s);
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "plan: %zu punctured subcarriers over %zu PRBs, %zu guard subcarriers\n",
                  pp.punctured().size(), report.punctured_prbs.size(), report.guard_positions.size());
    log << buf;
    std::snprintf(buf, sizeof buf, "plan: %.0f Hz unused at PRB granularity, %d subcarriers (%.3f PRB) recoverable\n",
                  acct.unutilized_hz, acct.recovered_subcarriers, acct.recovered_prb_equivalents);
    log << buf;
    for (const auto& v : report.violations)
        log << "plan: violation: " << v << '\n';
    log << (report.valid ? "plan: valid\n" : "plan: INVALID\n");
    return report.valid;
}

} // namespace dsr
