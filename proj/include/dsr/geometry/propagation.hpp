#pragma once

#include <algorithm>
#include <cmath>

#include "dsr/common/errors.hpp"
#include "dsr/common/math.hpp"

namespace dsr {

struct PropagationModel {
    double alpha = 3.0;                ///< path-loss exponent
    double wavelength_m = 0.375;
    double ref_distance_m = 1.0;       ///< d0
    double shadow_var_db2 = 36.0;      ///< sigma^2 in dB^2

    double shadow_std_db() const { return std::sqrt(shadow_var_db2); }

    void validate() const
    {
        if (!(alpha > 2.0))
            throw ConfigError("path-loss exponent must exceed 2");
        if (!(shadow_var_db2 >= 0.0))
            throw ConfigError("shadowing variance must be non-negative");
        if (!(wavelength_m > 0.0) || !(ref_distance_m > 0.0))
            throw ConfigError("wavelength and reference distance must be positive");
    }
};

inline constexpr double kMinLinkDistanceM = 1.0;

/// Free-space intercept at d0, power law beyond, log-normal shadowing. d is clamped to 1 m.
inline double path_gain(double distance_m, const PropagationModel& m, double shadow_db = 0.0)
{
    const double d = std::max(distance_m, kMinLinkDistanceM);
    const double fs = m.wavelength_m / (4.0 * kPi * m.ref_distance_m);
    return fs * fs * std::pow(d / m.ref_distance_m, -m.alpha) * db_to_linear(shadow_db);
}

} // namespace dsr
