#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/geometry.hpp"
#include "dsr/sim/pf_scheduler.hpp"
#include "dsr/sim/rate_stats.hpp"
#include "dsr/sim/scenario.hpp"

namespace dsr {

/// Seed of the UE realisation of drop d; shared by every scenario of a run.
inline std::uint64_t drop_seed(std::uint64_t seed, int d)
{
    auto g = make_stream(seed, static_cast<std::uint64_t>(d), 3);
    return g();
}

/**
 * One drop: TTI loop over the centre cell's sectors. Full buffer, so the
 * other cells only act through their static transmit state.
 */
inline DropResult run_drop(const ScenarioConfig& cfg, const Network& net, const CellularState& st, int drop_index)
{
    cfg.validate();
    const auto& layout = net.layout;
    if (st.assign.size() != layout.sector_count())
        throw ConfigError("transmit state does not match the layout");
    const std::size_t M = net.prbs().prb_count();
    for (const auto& a : st.assign)
        if (a.size() != M)
            throw ConfigError("transmit state does not match the PRB grid");

    const auto drop = drop_ues(layout, net.ues_per_sector, net.model, drop_seed(cfg.seed, drop_index));
    const auto centre = layout.center_cell();
    const int L = layout.sectors_per_cell();

    struct SectorRun {
        std::size_t sector;
        std::vector<std::size_t> ue_ids;
        std::vector<LinkTable> links;
        std::vector<char> usable;
        RateMatrix rates;
        std::vector<UeState> states;
    };
    std::vector<SectorRun> runs;
    for (int s = 0; s < L; ++s) {
        SectorRun r;
        r.sector = layout.sector_index(centre, s);
        r.usable.resize(M);
        for (std::size_t m = 0; m < M; ++m)
            r.usable[m] = st.assign[r.sector][m].cls != PrbClass::Reserved;
        runs.push_back(std::move(r));
    }
    for (const auto& u : drop.ues) {
        auto link = link_budget(u, drop, layout, net.model);
        if (layout.cell_of_sector(link.serving) != centre)
            continue;
        auto& r = runs[static_cast<std::size_t>(layout.local_sector(link.serving))];
        r.ue_ids.push_back(u.id);
        r.links.push_back(std::move(link));
    }

    const bool dynamic = gsm_transmits(cfg.mode) && cfg.gsm_traffic_activity < 1.0;
    std::vector<char> traffic_on(layout.sector_count(), 1);
    auto fill_rates = [&](SectorRun& r) {
        r.rates.assign(r.links.size(), std::vector<double>(M, 0.0));
        for (std::size_t k = 0; k < r.links.size(); ++k)
            for (std::size_t m = 0; m < M; ++m)
                if (r.usable[m])
                    r.rates[k][m] = shannon_rate(per_prb_sinr(r.links[k], m, st, dynamic ? &traffic_on : nullptr),
                                                 cfg.gamma_gap, net.prbs().prb_bandwidth_hz());
    };
    for (auto& r : runs) {
        fill_rates(r);
        r.states.resize(r.links.size());
    }

    auto activity_rng = make_stream(cfg.seed, static_cast<std::uint64_t>(drop_index), 5);
    std::bernoulli_distribution on(cfg.gsm_traffic_activity);
    std::vector<std::mt19937_64> tie_rng;
    for (int s = 0; s < L; ++s)
        tie_rng.push_back(make_stream(cfg.seed, static_cast<std::uint64_t>(drop_index), 10 + static_cast<std::uint64_t>(s)));

    DropResult out;
    out.drop = drop_index;
    out.stat_ttis = cfg.ttis - cfg.warmup_ttis;
    for (int n = 0; n < cfg.ttis; ++n) {
        if (dynamic) {
            for (auto& t : traffic_on)
                t = on(activity_rng) ? 1 : 0;
            for (auto& r : runs)
                fill_rates(r);
        }
        for (std::size_t s = 0; s < runs.size(); ++s) {
            auto& r = runs[s];
            TtiResult res;
            if (n == 0) {
                res = round_robin_schedule(r.rates, r.usable, kTtiS);
                for (std::size_t k = 0; k < r.states.size(); ++k)
                    r.states[k].T = std::max(res.served_bits[k] / kTtiS, kMinThroughputBps);
            } else {
                res = pf_schedule(r.rates, r.states, r.usable, kTtiS, tie_rng[s]);
                update_throughput(r.states, res, cfg.n_t, kTtiS);
            }
            if (n < cfg.warmup_ttis)
                continue;
            out.idle_prb_ttis += res.idle;
            for (std::size_t m = 0; m < M; ++m) {
                const int k = res.winner[m];
                if (k < 0)
                    continue;
                r.states[static_cast<std::size_t>(k)].served_bits += res.rate[m] * kTtiS;
                ++r.states[static_cast<std::size_t>(k)].class_wins[static_cast<int>(st.assign[r.sector][m].cls)];
            }
        }
    }

    const double window_s = out.stat_ttis * kTtiS;
    for (const auto& r : runs) {
        std::array<std::size_t, 4> class_prbs{};
        for (std::size_t m = 0; m < M; ++m)
            ++class_prbs[static_cast<int>(st.assign[r.sector][m].cls)];
        for (std::size_t k = 0; k < r.states.size(); ++k) {
            UeRecord u;
            u.drop = drop_index;
            u.ue_id = r.ue_ids[k];
            u.sector = r.sector;
            u.rate_bps = r.states[k].served_bits / window_s;
            u.sector_ues = r.states.size();
            u.class_prbs = class_prbs;
            for (int c = 0; c < 4; ++c)
                if (class_prbs[c] > 0)
                    u.alloc_prob[c] = static_cast<double>(r.states[k].class_wins[c]) /
                                      (static_cast<double>(out.stat_ttis) * class_prbs[c]);
            out.ues.push_back(u);
        }
    }
    return out;
}

/// All drops of one scenario, optionally spread over threads; result order is by drop.
inline std::vector<DropResult> run_drops(const ScenarioConfig& cfg, const Network& net, const CellularState& st,
                                         unsigned threads = 1)
{
    cfg.validate();
    std::vector<DropResult> out(static_cast<std::size_t>(cfg.drops));
    if (threads <= 1) {
        for (int d = 0; d < cfg.drops; ++d)
            out[static_cast<std::size_t>(d)] = run_drop(cfg, net, st, d);
        return out;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<unsigned>(threads, static_cast<unsigned>(cfg.drops)); ++t)
        pool.emplace_back([&] {
            for (int d; (d = next++) < cfg.drops;) {
                try {
                    out[static_cast<std::size_t>(d)] = run_drop(cfg, net, st, d);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err)
                        err = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
    return out;
}

/// Build the transmit state and run every drop.
inline RateStats run_scenario(const ScenarioConfig& cfg, const Network& net, const GsmInterferenceProfile* profile,
                              unsigned threads = 1)
{
    const auto st = build_cellular_state(cfg, net, profile);
    return aggregate(run_drops(cfg, net, st, threads));
}

} // namespace dsr
