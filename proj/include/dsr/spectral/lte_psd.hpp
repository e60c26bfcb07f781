#pragma once

#include <cmath>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/spectral/frequency_grid.hpp"
#include "dsr/spectral/ofdm.hpp"
#include "dsr/spectral/puncture_plan.hpp"

namespace dsr {

/// Alias terms kept in the discrete-time PSD, |m| <= this.
inline constexpr int kAliasTerms = 2;

/// Continuous-time LTE PSD at f for powers on Phi (W/Hz).
inline double lte_psd_at(double f, const std::vector<double>& powers, const OfdmConfig& cfg,
                         const PuncturePlan& plan)
{
    const auto& phi = plan.lte_set();
    double s = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (powers[i] != 0.0)
            s += powers[i] * cfg.window_power(f - phi[i] * cfg.subcarrier_spacing_hz);
    return s;
}

/// Discrete-time form: alias sum through an ideal lowpass of width 1/T_c.
inline double lte_psd_discrete_at(double f, const std::vector<double>& powers, const OfdmConfig& cfg,
                                  const PuncturePlan& plan)
{
    const double fs = 1.0 / cfg.sample_time_s;
    if (std::abs(f) > 0.5 * fs)
        return 0.0;
    double s = 0.0;
    for (int m = -kAliasTerms; m <= kAliasTerms; ++m)
        s += lte_psd_at(f - m * fs, powers, cfg, plan);
    return s;
}

/**
 * PSD of the LTE signal carrying powers[i] on subcarrier v_i of plan,
 * sampled on grid. Unit-energy window, so the integral equals the
 * total power up to spectrum outside the grid.
 */
inline SpectralDensity lte_psd(const std::vector<double>& powers, const OfdmConfig& cfg,
                               const PuncturePlan& plan, const FrequencyGrid& grid, bool discrete_time = false)
{
    if (powers.size() != plan.lte_count())
        throw ContractViolation("allocation length does not match the LTE subcarrier set");
    for (double p : powers)
        if (!(p >= 0.0) || !std::isfinite(p))
            throw ContractViolation("negative or non-finite subcarrier power");
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double f = grid.frequency(j);
        v[j] = discrete_time ? lte_psd_discrete_at(f, powers, cfg, plan) : lte_psd_at(f, powers, cfg, plan);
    }
    return SpectralDensity(grid, std::move(v));
}

} // namespace dsr
