#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "dsr/overlay/frequency_plan.hpp"
#include "dsr/spectral/puncture_plan.hpp"

namespace dsr {

enum class PrbClass { Normal, Adjacent, Ffr, Reserved };

inline const char* to_string(PrbClass c)
{
    switch (c) {
    case PrbClass::Normal:
        return "NORMAL";
    case PrbClass::Adjacent:
        return "ADJACENT";
    case PrbClass::Ffr:
        return "FFR";
    default:
        return "RESERVED";
    }
}

/// How a sector treats the GSM portion of the carrier.
enum class OverlayMode {
    NoGsm,     ///< whole carrier for LTE
    Puncture,  ///< every GSM window reserved, GSM carriers transmitting
    PunctureNoGsm,  ///< windows reserved but GSM silent
    Ffr,       ///< own and traffic windows reserved, foreign BCCH windows at low power
};

struct PrbAssignment {
    PrbClass cls = PrbClass::Normal;
    double power_w = 0.0;
};

namespace detail {

inline bool overlaps(const std::pair<double, double>& band, const Carrier& c)
{
    return band.second > c.center_hz - 100e3 && band.first < c.center_hz + 100e3;
}

} // namespace detail

/**
 * Per-PRB class and transmit power of one sector. RESERVED PRBs carry the
 * sector's own or forbidden carriers; FFR PRBs sit on reusable carriers;
 * ADJACENT PRBs border a PRB holding any GSM carrier. NORMAL and ADJACENT
 * share p_max equally; FFR PRBs get p_s scaled to 180 kHz.
 */
inline std::vector<PrbAssignment> classify_prbs(std::size_t sector, const FrequencyPlan& plan, const PrbGrid& prbs,
                                                OverlayMode mode, double p_max, double p_s_per_200khz = 0.0)
{
    const std::size_t n = prbs.prb_count();
    std::vector<PrbAssignment> out(n);
    if (mode != OverlayMode::NoGsm) {
        const auto& sc = plan.sector(sector);
        std::vector<Carrier> hard{sc.bcch, sc.traffic};
        hard.insert(hard.end(), sc.forbidden.begin(), sc.forbidden.end());
        const auto all = plan.all_carriers();
        std::vector<bool> holds_gsm(n, false);
        for (std::size_t m = 0; m < n; ++m) {
            const auto band = prbs.band(m);
            bool reserved = false, ffr = false;
            for (const auto& c : all)
                holds_gsm[m] = holds_gsm[m] || detail::overlaps(band, c);
            for (const auto& c : hard)
                reserved = reserved || detail::overlaps(band, c);
            for (const auto& c : sc.reusable)
                ffr = ffr || detail::overlaps(band, c);
            if (reserved || (ffr && mode != OverlayMode::Ffr))
                out[m].cls = PrbClass::Reserved;
            else if (ffr)
                out[m].cls = PrbClass::Ffr;
        }
        for (std::size_t m = 0; m < n; ++m) {
            if (out[m].cls != PrbClass::Normal)
                continue;
            const bool left = m > 0 && holds_gsm[m - 1];
            const bool right = m + 1 < n && holds_gsm[m + 1];
            if (left || right)
                out[m].cls = PrbClass::Adjacent;
        }
    }
    const auto full = static_cast<double>(std::count_if(out.begin(), out.end(), [](const PrbAssignment& a) {
        return a.cls == PrbClass::Normal || a.cls == PrbClass::Adjacent;
    }));
    const double ffr_power = p_s_per_200khz * prbs.prb_bandwidth_hz() / 200e3;
    for (auto& a : out) {
        if (a.cls == PrbClass::Normal || a.cls == PrbClass::Adjacent)
            a.power_w = p_max / full;
        else if (a.cls == PrbClass::Ffr)
            a.power_w = ffr_power;
    }
    return out;
}

/// Plan export: cell,sector,bcch_carrier,traffic_carrier,prb_index,class,power_w.
inline void write_plan_csv(std::ostream& os, const FrequencyPlan& plan, const PrbGrid& prbs, OverlayMode mode,
                           double p_max, double p_s_per_200khz)
{
    os << "cell,sector,bcch_carrier,traffic_carrier,prb_index,class,power_w\n";
    char buf[160];
    for (std::size_t s = 0; s < plan.sector_count(); ++s) {
        const auto cls = classify_prbs(s, plan, prbs, mode, p_max, p_s_per_200khz);
        const auto& sc = plan.sector(s);
        for (std::size_t m = 0; m < cls.size(); ++m) {
            std::snprintf(buf, sizeof buf, "%zu,%d,%s,%s,%zu,%s,%.9g\n", plan.layout().cell_of_sector(s),
                          plan.layout().local_sector(s), sc.bcch.name().c_str(), sc.traffic.name().c_str(), m,
                          to_string(cls[m].cls), cls[m].power_w);
            os << buf;
        }
    }
}

} // namespace dsr
