#pragma once

#include <array>
#include <vector>

#include "dsr/spectral/puncture_plan.hpp"

namespace dsr {

/// Three adjacent 200 kHz carriers sharing one label.
struct GsmGroup {
    char label;
    double center_hz;  ///< centre of the middle carrier
};

inline constexpr int kCarriersPerGroup = 3;
inline constexpr double kGsmRasterHz = 200e3;

/**
 * Default placement of the four carrier groups: BCCH groups A, B, C and
 * traffic group D, each in its own 4-PRB window of the 10 MHz carrier,
 * clear of the central 1.08 MHz.
 */
inline std::array<GsmGroup, 4> default_gsm_groups()
{
    return {{{'A', -3.8e6}, {'B', -2.0e6}, {'C', 2.0e6}, {'D', 3.8e6}}};
}

/// Carrier centre of member idx (1-based, ascending frequency) of group g.
inline double group_carrier_hz(const GsmGroup& g, int idx)
{
    return g.center_hz + (idx - 2) * kGsmRasterHz;
}

/// All twelve carriers at a common PSD offset.
inline std::vector<GsmChannel> default_gsm_channels(double psd_offset_db = 13.56)
{
    std::vector<GsmChannel> out;
    for (const auto& g : default_gsm_groups())
        for (int i = 1; i <= kCarriersPerGroup; ++i)
            out.push_back(GsmChannel{group_carrier_hz(g, i), psd_offset_db, kGsmRasterHz});
    return out;
}

} // namespace dsr
