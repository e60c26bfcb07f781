#pragma once

#include <cmath>

#include "dsr/common/errors.hpp"
#include "dsr/common/math.hpp"

namespace dsr {

enum class SpectralWindow {
    Rectangular,  ///< unit-energy rectangle over T_s
};

/// OFDM numerology of the LTE carrier.
struct OfdmConfig {
    int subcarrier_count = 600;                              ///< Q
    double subcarrier_spacing_hz = 15e3;                     ///< 1/T
    double symbol_time_s = (1200.0 / 1024.0) / 15e3;         ///< T_s, includes cyclic prefix
    double sample_time_s = 1.0 / (1024.0 * 15e3);            ///< T_c
    double subcarrier_bandwidth_hz = 15e3;                   ///< b
    SpectralWindow window = SpectralWindow::Rectangular;
    bool white_unit_data = true;                             ///< zero-mean unit-variance i.i.d. symbols

    double useful_time_s() const { return 1.0 / subcarrier_spacing_hz; }
    int half_count() const { return subcarrier_count / 2; }
    double subcarrier_frequency(int k) const { return k * subcarrier_spacing_hz; }

    /// |W(f)|^2 for the unit-energy window.
    double window_power(double f) const
    {
        const double s = sinc(symbol_time_s * f);
        return symbol_time_s * s * s;
    }

    void validate() const
    {
        if (subcarrier_count <= 0 || subcarrier_count % 2 != 0)
            throw ConfigError("subcarrier count must be positive and even");
        if (!(subcarrier_spacing_hz > 0.0) || !(sample_time_s > 0.0) || !(subcarrier_bandwidth_hz > 0.0))
            throw ConfigError("OFDM timing parameters must be positive");
        if (symbol_time_s < useful_time_s() * (1.0 - 1e-12))
            throw ConfigError("symbol time must not be shorter than the useful time");
        if (std::abs(subcarrier_bandwidth_hz * useful_time_s() - 1.0) > 1e-9)
            throw ConfigError("subcarrier bandwidth must equal the subcarrier spacing");
    }
};

} // namespace dsr
