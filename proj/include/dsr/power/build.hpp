#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/common/math.hpp"
#include "dsr/power/problem.hpp"
#include "dsr/spectral/interference.hpp"
#include "dsr/spectral/leakage_mask.hpp"
#include "dsr/spectral/ofdm.hpp"
#include "dsr/spectral/puncture_plan.hpp"

namespace dsr {

enum class ConstraintSet {
    ChannelCenters,  ///< one row per GSM carrier centre
    GroupEdges,      ///< outermost carrier of each contiguous group only
};

struct ProblemSpec {
    double gsm_offset_db = 13.56;
    /// Thermal noise per subcarrier (W); 1/(10 T_s 192000) puts total noise 10 dB under 40 W.
    double thermal_noise_w = 1.0 / (10.0 * ((1200.0 / 1024.0) / 15e3) * 192000.0);
    double mask_level_db = -15.0;
    double p_max = 40.0;
    ConstraintSet constraint_set = ConstraintSet::ChannelCenters;
    Impairment impairment = Impairment::Both;
};

/// Nominal LTE PSD with the budget spread over the whole carrier (W/Hz).
inline double reference_lte_psd(const OfdmConfig& cfg, double p_max)
{
    return p_max / (cfg.subcarrier_count * cfg.subcarrier_bandwidth_hz);
}

/// GSM power seen on each subcarrier of Phi (W).
inline std::vector<double> gsm_impairment_noise(const PuncturePlan& plan, const GsmInterferenceProfile& profile,
                                                double gsm_inchannel_psd)
{
    const double b = plan.config().subcarrier_bandwidth_hz;
    std::vector<double> out;
    out.reserve(plan.lte_count());
    for (int k : plan.lte_set()) {
        double s = 0.0;
        for (const auto& g : plan.gsm_channels())
            s += profile.band_power(g.center_hz, gsm_inchannel_psd, (k - 0.5) * b, (k + 0.5) * b);
        out.push_back(s);
    }
    return out;
}

/// Frequencies to protect: every carrier centre, or the group edges.
inline std::vector<double> protected_frequencies(const PuncturePlan& plan, ConstraintSet set, double raster_hz = 200e3)
{
    std::vector<double> centers;
    for (const auto& g : plan.gsm_channels())
        centers.push_back(g.center_hz);
    std::sort(centers.begin(), centers.end());
    if (set == ConstraintSet::ChannelCenters)
        return centers;
    std::vector<double> out;
    for (std::size_t r = 0; r < centers.size();) {
        std::size_t e = r;
        while (e + 1 < centers.size() && centers[e + 1] - centers[e] <= raster_hz * (1.0 + 1e-9))
            ++e;
        out.push_back(centers[r]);
        if (e != r)
            out.push_back(centers[e]);
        r = e + 1;
    }
    return out;
}

/// Assembles the mask rows and budget around precomputed impairment powers.
inline AllocationProblem build_problem(const PuncturePlan& plan, const ProblemSpec& spec,
                                       const std::vector<double>& impairment_w)
{
    const auto& cfg = plan.config();
    const PrbGrid prbs(cfg);
    const auto report = validate_puncture_plan(plan, prbs);
    if (!report.valid) {
        std::string msg = "invalid puncture plan:";
        for (const auto& v : report.violations)
            msg += " " + v;
        throw ConfigError(msg);
    }
    if (impairment_w.size() != plan.lte_count())
        throw ContractViolation("impairment vector does not match the LTE subcarrier set");

    AllocationProblem prob;
    prob.p_max = spec.p_max;
    prob.noise.resize(plan.lte_count());
    for (std::size_t i = 0; i < prob.noise.size(); ++i)
        prob.noise[i] = spec.thermal_noise_w + impairment_w[i];

    const double N = static_cast<double>(plan.lte_count());
    const double threshold = db_to_linear(spec.mask_level_db) * spec.p_max / (N * cfg.subcarrier_bandwidth_hz);
    for (double f : protected_frequencies(plan, spec.constraint_set)) {
        MaskConstraint row;
        row.freq_hz = f;
        row.threshold = threshold;
        row.weights.reserve(plan.lte_count());
        for (int k : plan.lte_set())
            row.weights.push_back(cfg.window_power(f - k * cfg.subcarrier_spacing_hz));
        prob.constraints.push_back(std::move(row));
    }
    return prob;
}

/// Full construction including the GSM impairment integrals.
inline AllocationProblem build_problem(const PuncturePlan& plan, const ProblemSpec& spec,
                                       const GsmLeakageMask& mask = {})
{
    const auto& cfg = plan.config();
    std::vector<double> imp(plan.lte_count(), 0.0);
    if (!plan.gsm_channels().empty() && spec.impairment != Impairment::None) {
        const GsmInterferenceProfile prof(spec.impairment, mask, cfg.symbol_time_s);
        imp = gsm_impairment_noise(plan, prof, reference_lte_psd(cfg, spec.p_max) * db_to_linear(spec.gsm_offset_db));
    }
    return build_problem(plan, spec, imp);
}

} // namespace dsr
