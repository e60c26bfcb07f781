#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/common/math.hpp"
#include "dsr/spectral/frequency_grid.hpp"

namespace dsr {

/// GSM adjacent-channel leakage profile, (offset kHz, attenuation dB) pairs.
class GsmLeakageMask {
public:
    struct Point {
        double offset_khz;
        double attenuation_db;
    };

    /// The standard nine-point GSM/GPRS profile.
    GsmLeakageMask()
        : points_{{100, -1}, {200, 30}, {250, 33}, {400, 60}, {600, 67},
                  {700, 67}, {800, 67}, {900, 67}, {1000, 67}}
    {
    }

    explicit GsmLeakageMask(std::vector<Point> points) : points_(std::move(points))
    {
        if (points_.size() < 2)
            throw ConfigError("leakage mask needs at least two breakpoints");
        for (std::size_t i = 1; i < points_.size(); ++i) {
            if (!(points_[i].offset_khz > points_[i - 1].offset_khz))
                throw ConfigError("leakage mask offsets must be strictly increasing");
            if (points_[i].attenuation_db < points_[i - 1].attenuation_db)
                throw ConfigError("leakage mask attenuation must be non-decreasing");
        }
    }

    const std::vector<Point>& points() const { return points_; }

    /// Offset (kHz) at and below which the emission is in-channel.
    double in_channel_edge_khz() const { return points_.front().offset_khz; }
    double outermost_khz() const { return points_.back().offset_khz; }

private:
    std::vector<Point> points_;
};

/**
 * Attenuation (dB) at offset delta_f_khz from the carrier centre.
 * Exact at breakpoints, linear in dB between them, 0 below the first
 * breakpoint and held at the last value beyond the outermost one.
 */
inline double aclr_at(double delta_f_khz, const GsmLeakageMask& mask)
{
    if (!(delta_f_khz >= 0.0))
        throw DomainError("aclr_at: offset must be non-negative");
    const auto& p = mask.points();
    if (delta_f_khz < p.front().offset_khz)
        return 0.0;
    if (delta_f_khz >= p.back().offset_khz)
        return p.back().attenuation_db;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (delta_f_khz <= p[i].offset_khz) {
            const double t = (delta_f_khz - p[i - 1].offset_khz) / (p[i].offset_khz - p[i - 1].offset_khz);
            return p[i - 1].attenuation_db + t * (p[i].attenuation_db - p[i - 1].attenuation_db);
        }
    }
    return p.back().attenuation_db;
}

/// One GSM carrier as seen at the LTE receiver.
struct GsmEmitter {
    double center_hz;
    double inchannel_psd;  ///< W/Hz
};

/// Emission PSD of one carrier at frequency f (W/Hz).
inline double gsm_emission_at(double f, const GsmEmitter& g, const GsmLeakageMask& mask)
{
    const double d_khz = std::abs(f - g.center_hz) * 1e-3;
    if (d_khz <= mask.in_channel_edge_khz())
        return g.inchannel_psd;
    return g.inchannel_psd * db_to_linear(-aclr_at(d_khz, mask));
}

/// In-channel part only: flat over the carrier's 200 kHz, zero elsewhere.
inline double gsm_inchannel_at(double f, const GsmEmitter& g, const GsmLeakageMask& mask)
{
    const double d_khz = std::abs(f - g.center_hz) * 1e-3;
    return d_khz <= mask.in_channel_edge_khz() ? g.inchannel_psd : 0.0;
}

namespace detail {

inline void check_emission_grid(const FrequencyGrid& grid)
{
    if (grid.step() > 5e3)
        throw ConfigError("GSM emission grid step must be at most 5 kHz");
}

inline bool on_channel_edge(double f, const GsmEmitter& g, const GsmLeakageMask& mask)
{
    return std::abs(std::abs(f - g.center_hz) - mask.in_channel_edge_khz() * 1e3) < 1e-6;
}

} // namespace detail

/**
 * Sum of mask-shaped emissions sampled on grid. A sample sitting exactly on
 * the in-channel edge takes the mean of the two one-sided limits, which
 * keeps the piecewise-linear integral of the jump exact.
 */
inline SpectralDensity gsm_emission_psd(const std::vector<GsmEmitter>& channels,
                                        const GsmLeakageMask& mask, const FrequencyGrid& grid)
{
    detail::check_emission_grid(grid);
    std::vector<double> v(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double f = grid.frequency(i);
        for (const auto& g : channels) {
            if (detail::on_channel_edge(f, g, mask)) {
                const double outside = g.inchannel_psd * db_to_linear(-aclr_at(mask.in_channel_edge_khz(), mask));
                v[i] += 0.5 * (g.inchannel_psd + outside);
            } else {
                v[i] += gsm_emission_at(f, g, mask);
            }
        }
    }
    return SpectralDensity(grid, std::move(v));
}

inline SpectralDensity gsm_emission_psd(const GsmEmitter& channel, const GsmLeakageMask& mask,
                                        const FrequencyGrid& grid)
{
    return gsm_emission_psd(std::vector<GsmEmitter>{channel}, mask, grid);
}

/// Sum of the flat in-channel parts, without leakage skirts.
inline SpectralDensity gsm_inchannel_psd(const std::vector<GsmEmitter>& channels,
                                         const GsmLeakageMask& mask, const FrequencyGrid& grid)
{
    detail::check_emission_grid(grid);
    std::vector<double> v(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double f = grid.frequency(i);
        for (const auto& g : channels)
            v[i] += detail::on_channel_edge(f, g, mask) ? 0.5 * g.inchannel_psd : gsm_inchannel_at(f, g, mask);
    }
    return SpectralDensity(grid, std::move(v));
}

/**
 * Power (W) of the mask-shaped emission falling into [lo, hi].
 * Integrates the analytic profile piecewise so breakpoints are honoured
 * without a sampling grid.
 */
inline double gsm_emission_band_power(const std::vector<GsmEmitter>& channels,
                                      const GsmLeakageMask& mask, double lo, double hi)
{
    if (!(hi > lo))
        return 0.0;
    double total = 0.0;
    for (const auto& g : channels) {
        std::vector<double> cuts{lo, hi};
        cuts.push_back(g.center_hz);
        for (const auto& p : mask.points()) {
            cuts.push_back(g.center_hz - p.offset_khz * 1e3);
            cuts.push_back(g.center_hz + p.offset_khz * 1e3);
        }
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t c = 1; c < cuts.size(); ++c) {
            const double a = std::max(lo, cuts[c - 1]);
            const double b = std::min(hi, cuts[c]);
            if (!(b > a))
                continue;
            // linear in dB inside a piece: Simpson on the smooth exponential
            constexpr int n = 32;
            const double h = (b - a) / n;
            // nudge the endpoints inward so the in-channel step is sampled on the correct side
            const double eps = 1e-9 * std::max(1.0, std::abs(b - a));
            double s = gsm_emission_at(a + eps, g, mask) + gsm_emission_at(b - eps, g, mask);
            for (int k = 1; k < n; ++k)
                s += (k % 2 ? 4.0 : 2.0) * gsm_emission_at(a + k * h, g, mask);
            total += s * h / 3.0;
        }
    }
    return total;
}

} // namespace dsr
