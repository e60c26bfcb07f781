#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/common/math.hpp"
#include "dsr/spectral/interference.hpp"
#include "dsr/spectral/leakage_mask.hpp"
#include "dsr/spectral/puncture_plan.hpp"

namespace dsr {

enum class CapAveraging {
    PrbMean,          ///< interference power averaged over the 12 subcarriers
    WorstSubcarrier,  ///< most exposed subcarrier sets the cap
};

struct SinrCapOptions {
    CapAveraging averaging = CapAveraging::PrbMean;
    bool include_ics = false;
};

/**
 * Interference-limited SINR (dB) of a PRB with unit LTE PSD per
 * subcarrier, GSM carriers of plan at gsm_offset_db above it, no thermal
 * noise. Returns +infinity when there is nothing to interfere.
 */
inline double leakage_limited_sinr(std::size_t prb, const PuncturePlan& plan, const PrbGrid& prbs,
                                   double gsm_offset_db, const GsmLeakageMask& mask = {},
                                   const SinrCapOptions& opt = {})
{
    const auto sc = prbs.subcarriers(prb);
    for (int k : sc)
        if (plan.is_punctured(k))
            throw DomainError("PRB " + std::to_string(prb) + " is punctured");
    const double gsm_psd = db_to_linear(gsm_offset_db);
    if (plan.gsm_channels().empty() || gsm_psd == 0.0)
        return std::numeric_limits<double>::infinity();

    const double b = plan.config().subcarrier_bandwidth_hz;
    const GsmInterferenceProfile prof(opt.include_ics ? Impairment::Both : Impairment::Leakage, mask,
                                      plan.config().symbol_time_s);
    double sum = 0.0;
    double worst = 0.0;
    for (int k : sc) {
        double i_k = 0.0;
        for (const auto& g : plan.gsm_channels())
            i_k += prof.band_power(g.center_hz, gsm_psd, (k - 0.5) * b, (k + 0.5) * b);
        sum += i_k;
        worst = std::max(worst, i_k);
    }
    const double signal = b;  // unit PSD over one subcarrier
    const double interf = opt.averaging == CapAveraging::PrbMean ? sum / sc.size() : worst;
    if (interf <= 0.0)
        return std::numeric_limits<double>::infinity();
    return linear_to_db(signal / interf);
}

} // namespace dsr
