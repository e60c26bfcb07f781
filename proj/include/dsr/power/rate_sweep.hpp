#pragma once

#include <cstdio>
#include <ostream>
#include <vector>

#include "dsr/power/appendix_solver.hpp"
#include "dsr/power/build.hpp"
#include "dsr/power/oracle.hpp"

namespace dsr {

/// Optimal rates (nats) at one SNR under each impairment combination.
struct RatePoint {
    double snr_db = 0.0;
    double noise_only = 0.0;
    double with_leakage = 0.0;
    double with_ics = 0.0;
    double with_both = 0.0;
};

/// Appendix search, falling back to the reference solver if its pick is infeasible.
inline PowerAllocation solve_with_fallback(const AllocationProblem& prob)
{
    auto a = solve_appendix(prob);
    if (a.feasible)
        return a;
    return solve_oracle(prob);
}

/**
 * Rate against SNR, SNR being total LTE power over total thermal noise in
 * the occupied band. Impairment integrals are computed once and reused.
 */
inline std::vector<RatePoint> rate_vs_snr(const PuncturePlan& plan, ProblemSpec spec, const std::vector<double>& snr_db,
                                          const GsmLeakageMask& mask = {})
{
    const auto& cfg = plan.config();
    const double gsm_psd = reference_lte_psd(cfg, spec.p_max) * db_to_linear(spec.gsm_offset_db);
    const std::vector<double> none(plan.lte_count(), 0.0);
    auto noise_of = [&](Impairment mode) {
        if (plan.gsm_channels().empty())
            return none;
        return gsm_impairment_noise(plan, GsmInterferenceProfile(mode, mask, cfg.symbol_time_s), gsm_psd);
    };
    const auto leak = noise_of(Impairment::Leakage);
    const auto ics = noise_of(Impairment::Ics);
    const auto both = noise_of(Impairment::Both);

    std::vector<RatePoint> out;
    for (double s : snr_db) {
        spec.thermal_noise_w = spec.p_max / (cfg.subcarrier_count * db_to_linear(s));
        RatePoint r;
        r.snr_db = s;
        r.noise_only = solve_with_fallback(build_problem(plan, spec, none)).objective;
        r.with_leakage = solve_with_fallback(build_problem(plan, spec, leak)).objective;
        r.with_ics = solve_with_fallback(build_problem(plan, spec, ics)).objective;
        r.with_both = solve_with_fallback(build_problem(plan, spec, both)).objective;
        out.push_back(r);
    }
    return out;
}

inline void write_rate_sweep_csv(std::ostream& os, const std::vector<RatePoint>& pts)
{
    os << "snr_db,noise_nats,noise_leakage_nats,noise_ics_nats,noise_both_nats\n";
    char buf[160];
    for (const auto& p : pts) {
        std::snprintf(buf, sizeof buf, "%.3f,%.9g,%.9g,%.9g,%.9g\n", p.snr_db, p.noise_only, p.with_leakage,
                      p.with_ics, p.with_both);
        os << buf;
    }
}

} // namespace dsr
