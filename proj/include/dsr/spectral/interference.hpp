#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/spectral/frequency_grid.hpp"
#include "dsr/spectral/ics.hpp"
#include "dsr/spectral/leakage_mask.hpp"

namespace dsr {

/// Which GSM impairments reach an LTE subcarrier.
enum class Impairment {
    None,
    Leakage,  ///< mask-shaped emission falling in the band
    Ics,      ///< in-channel GSM power picked up through the receive window
    Both,     ///< receive window applied to the full emission
};

/**
 * Interference footprint of a single GSM carrier with unit in-channel
 * PSD, centred at 0 Hz. Band powers for any carrier follow by shifting
 * and scaling, since every carrier shares the same mask.
 */
class GsmInterferenceProfile {
public:
    GsmInterferenceProfile(Impairment mode, const GsmLeakageMask& mask, double T_s,
                           double half_span_hz = 11e6, double step_hz = 1e3)
        : mode_(mode), mask_(mask)
    {
        if (mode == Impairment::None || mode == Impairment::Leakage)
            return;
        const double margin = 1e6;
        const FrequencyGrid in(-(half_span_hz + margin), half_span_hz + margin, step_hz);
        const FrequencyGrid out(-half_span_hz, half_span_hz, step_hz);
        const GsmEmitter unit{0.0, 1.0};
        if (mode == Impairment::Ics)
            profile_ = virtual_psd_on(gsm_inchannel_psd({unit}, mask, in), T_s, out, Extension::Zero);
        else
            profile_ = virtual_psd_on(gsm_emission_psd(unit, mask, in), T_s, out, Extension::Flat);
    }

    Impairment mode() const { return mode_; }

    /// Power (W) in [lo, hi] from a carrier at center_hz with the given in-channel PSD.
    double band_power(double center_hz, double inchannel_psd, double lo, double hi) const
    {
        switch (mode_) {
        case Impairment::None:
            return 0.0;
        case Impairment::Leakage:
            return gsm_emission_band_power({GsmEmitter{center_hz, inchannel_psd}}, mask_, lo, hi);
        default:
            if (lo - center_hz < profile_->grid().f_min() || hi - center_hz > profile_->grid().f_max())
                throw DomainError("band lies outside the tabulated interference profile");
            return inchannel_psd * profile_->integrate(lo - center_hz, hi - center_hz);
        }
    }

    const std::optional<SpectralDensity>& profile() const { return profile_; }

private:
    Impairment mode_;
    GsmLeakageMask mask_;
    std::optional<SpectralDensity> profile_;
};

} // namespace dsr
