#pragma once

#include <cmath>

#include "dsr/common/math.hpp"

namespace dsr {

/// Sector antenna power pattern, unity on boresight and zero at the back.
inline double antenna_gain(double phi)
{
    const double front = 0.5 * (1.0 + std::cos(phi));
    const double u = 0.72 * kPi * std::sin(phi);
    const double lobe = std::abs(u) < 1e-8 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
    return front * lobe;
}

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a)
{
    a = std::fmod(a + kPi, 2.0 * kPi);
    if (a <= 0)
        a += 2.0 * kPi;
    return a - kPi;
}

} // namespace dsr
