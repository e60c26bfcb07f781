#pragma once

#include "dsr/common/errors.hpp"

namespace dsr {

struct FfrConfig {
    double p_g = 20.0;         ///< GSM transmit power per 200 kHz, W
    double gamma = 10.0;       ///< GSM SINR threshold, linear
    double n0 = 0.0;           ///< noise per 200 kHz, W
    double h = 1.0;            ///< mean gain at the worst-case geometry

    void validate() const
    {
        if (!(p_g > 0.0) || !(gamma > 0.0) || !(n0 >= 0.0) || !(h > 0.0))
            throw ConfigError("FFR parameters must be positive");
    }
};

struct FfrPower {
    double p_s = 0.0;  ///< W per 200 kHz
    bool enabled = false;
};

/// Largest low-power LTE level keeping the GSM SINR at gamma in the symmetric worst case.
inline FfrPower ffr_low_power(const FfrConfig& c)
{
    c.validate();
    const double p = c.p_g / (2.0 * c.gamma) - c.n0 / (2.0 * c.h);
    if (!(p > 0.0))
        return {0.0, false};
    return {p, true};
}

} // namespace dsr
