#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/spectral/ofdm.hpp"

namespace dsr {

/// A GSM carrier embedded in the LTE band.
struct GsmChannel {
    double center_hz = 0.0;
    double psd_offset_db = 13.56;  ///< in-channel PSD over the reference LTE PSD
    double bandwidth_hz = 200e3;
};

/// Partition of the LTE subcarriers into punctured and used sets.
class PuncturePlan {
public:
    /// Plan with an explicit punctured set and no GSM channels.
    static PuncturePlan from_subcarriers(const OfdmConfig& cfg, const std::vector<int>& punctured)
    {
        PuncturePlan p(cfg);
        for (int k : punctured) {
            if (!p.in_omega(k))
                throw ConfigError("punctured subcarrier " + std::to_string(k) + " is outside the carrier");
            p.punctured_.insert(k);
        }
        p.finish();
        return p;
    }

    /**
     * Puncture every subcarrier whose band overlaps a GSM channel, then add
     * guard_per_edge subcarriers on both sides of each contiguous run.
     * Channel centres must sit on the raster raster_offset_hz + n*raster_hz.
     */
    static PuncturePlan from_gsm_channels(const OfdmConfig& cfg, std::vector<GsmChannel> channels,
                                          int guard_per_edge = 0, double raster_offset_hz = 0.0,
                                          double raster_hz = 200e3)
    {
        if (guard_per_edge < 0)
            throw ConfigError("guard subcarrier count must be non-negative");
        PuncturePlan p(cfg);
        p.guard_per_edge_ = guard_per_edge;
        p.raster_offset_hz_ = raster_offset_hz;
        const double b = cfg.subcarrier_bandwidth_hz;
        std::sort(channels.begin(), channels.end(),
                  [](const GsmChannel& a, const GsmChannel& c) { return a.center_hz < c.center_hz; });
        for (const auto& g : channels) {
            const double n = (g.center_hz - raster_offset_hz) / raster_hz;
            if (std::abs(n - std::round(n)) > 1e-9 * std::max(1.0, std::abs(n)))
                throw ConfigError("GSM channel at " + std::to_string(g.center_hz) + " Hz is off the carrier raster");
            const double lo = g.center_hz - 0.5 * g.bandwidth_hz;
            const double hi = g.center_hz + 0.5 * g.bandwidth_hz;
            for (int k : p.omega_)
                if ((k + 0.5) * b > lo && (k - 0.5) * b < hi)
                    p.punctured_.insert(k);
        }
        p.gsm_ = std::move(channels);
        if (guard_per_edge > 0) {
            // guards go around each run of GSM-occupied subcarriers in Omega order
            std::vector<int> core(p.punctured_.begin(), p.punctured_.end());
            std::set<int> guards;
            for (std::size_t r = 0; r < core.size();) {
                std::size_t e = r;
                while (e + 1 < core.size() && p.position(core[e + 1]) == p.position(core[e]) + 1)
                    ++e;
                const long first = p.position(core[r]);
                const long last = p.position(core[e]);
                for (int g = 1; g <= guard_per_edge; ++g) {
                    if (first - g >= 0)
                        guards.insert(p.omega_[static_cast<std::size_t>(first - g)]);
                    if (last + g < static_cast<long>(p.omega_.size()))
                        guards.insert(p.omega_[static_cast<std::size_t>(last + g)]);
                }
                r = e + 1;
            }
            for (int k : guards)
                if (!p.punctured_.count(k))
                    p.guards_.push_back(k);
            p.punctured_.insert(guards.begin(), guards.end());
        }
        p.finish();
        return p;
    }

    const OfdmConfig& config() const { return cfg_; }
    /// Omega, ascending: -Q/2..-1, 1..Q/2.
    const std::vector<int>& omega() const { return omega_; }
    std::vector<int> punctured() const { return {punctured_.begin(), punctured_.end()}; }
    /// Phi, ascending; lte_set()[i] is v_i.
    const std::vector<int>& lte_set() const { return phi_; }
    std::size_t lte_count() const { return phi_.size(); }
    const std::vector<GsmChannel>& gsm_channels() const { return gsm_; }
    int guard_subcarriers_per_edge() const { return guard_per_edge_; }
    const std::vector<int>& guard_subcarriers() const { return guards_; }
    double raster_offset_hz() const { return raster_offset_hz_; }

    bool is_punctured(int k) const { return punctured_.count(k) != 0; }
    bool is_guard(int k) const { return std::binary_search(guards_.begin(), guards_.end(), k); }
    bool in_omega(int k) const { return k != 0 && std::abs(k) <= cfg_.half_count(); }

    /// Index of k within Omega.
    long position(int k) const
    {
        const int h = cfg_.half_count();
        return k < 0 ? k + h : k + h - 1;
    }

private:
    explicit PuncturePlan(const OfdmConfig& cfg) : cfg_(cfg)
    {
        cfg_.validate();
        const int h = cfg.half_count();
        omega_.reserve(static_cast<std::size_t>(2 * h));
        for (int k = -h; k <= h; ++k)
            if (k != 0)
                omega_.push_back(k);
    }

    void finish()
    {
        phi_.clear();
        for (int k : omega_)
            if (!punctured_.count(k))
                phi_.push_back(k);
        std::sort(guards_.begin(), guards_.end());
    }

    OfdmConfig cfg_;
    std::vector<int> omega_;
    std::set<int> punctured_;
    std::vector<int> phi_;
    std::vector<GsmChannel> gsm_;
    std::vector<int> guards_;
    int guard_per_edge_ = 0;
    double raster_offset_hz_ = 0.0;
};

/// Resource-block tiling of Omega, 12 subcarriers per block.
class PrbGrid {
public:
    static constexpr int kSubcarriersPerPrb = 12;

    explicit PrbGrid(const OfdmConfig& cfg) : cfg_(cfg)
    {
        cfg.validate();
        if (cfg.subcarrier_count % kSubcarriersPerPrb != 0)
            throw ConfigError("subcarrier count is not a multiple of 12");
        count_ = static_cast<std::size_t>(cfg.subcarrier_count / kSubcarriersPerPrb);
    }

    std::size_t prb_count() const { return count_; }
    double prb_bandwidth_hz() const { return kSubcarriersPerPrb * cfg_.subcarrier_bandwidth_hz; }

    /// Subcarrier indices of PRB m, ascending.
    std::vector<int> subcarriers(std::size_t m) const
    {
        if (m >= count_)
            throw DomainError("PRB index out of range");
        std::vector<int> out;
        const int h = cfg_.half_count();
        for (int j = 0; j < kSubcarriersPerPrb; ++j) {
            const int pos = static_cast<int>(m) * kSubcarriersPerPrb + j;
            out.push_back(pos < h ? pos - h : pos - h + 1);
        }
        return out;
    }

    std::size_t prb_of(int k) const
    {
        const int h = cfg_.half_count();
        if (k == 0 || std::abs(k) > h)
            throw DomainError("subcarrier outside the carrier");
        const int pos = k < 0 ? k + h : k + h - 1;
        return static_cast<std::size_t>(pos / kSubcarriersPerPrb);
    }

    /// Occupied band of PRB m (Hz).
    std::pair<double, double> band(std::size_t m) const
    {
        const auto sc = subcarriers(m);
        const double b = cfg_.subcarrier_bandwidth_hz;
        return {(sc.front() - 0.5) * b, (sc.back() + 0.5) * b};
    }

    double center_hz(std::size_t m) const
    {
        const auto [lo, hi] = band(m);
        return 0.5 * (lo + hi);
    }

    const OfdmConfig& config() const { return cfg_; }

private:
    OfdmConfig cfg_;
    std::size_t count_ = 0;
};

struct PlanReport {
    bool valid = true;
    std::vector<std::string> violations;
    std::vector<std::size_t> punctured_prbs;
    std::vector<int> guard_positions;
};

/// Half-width of the protected broadcast/sync region, Hz.
inline constexpr double kCentralRegionHalfWidthHz = 1.08e6 / 2.0;

/// Checks the protected central region and lists the affected PRBs.
inline PlanReport validate_puncture_plan(const PuncturePlan& plan, const PrbGrid& prbs)
{
    PlanReport r;
    if (plan.config().subcarrier_count != prbs.config().subcarrier_count) {
        r.valid = false;
        r.violations.push_back("plan and PRB grid disagree on the subcarrier count");
        return r;
    }
    const double b = plan.config().subcarrier_bandwidth_hz;
    const int central = static_cast<int>(std::lround(kCentralRegionHalfWidthHz / b));
    std::set<std::size_t> prb_set;
    bool overlap = false;
    for (int k : plan.punctured()) {
        if (std::abs(k) <= central)
            overlap = true;
        prb_set.insert(prbs.prb_of(k));
    }
    if (overlap) {
        r.valid = false;
        r.violations.push_back("sync/broadcast overlap");
    }
    r.punctured_prbs.assign(prb_set.begin(), prb_set.end());
    r.guard_positions = plan.guard_subcarriers();
    return r;
}

struct FractionalPrb {
    std::size_t prb = 0;
    int usable = 0;    ///< subcarriers still available to LTE
    int reserved = 0;  ///< subcarriers overlapping GSM
    int guard = 0;
};

struct PartialPrbReport {
    std::vector<std::size_t> reserved_prbs;  ///< PRBs touched by GSM or guard
    double unutilized_hz = 0.0;              ///< lost to PRB granularity
    std::vector<FractionalPrb> fractional;
    int recovered_subcarriers = 0;
    double recovered_prb_equivalents = 0.0;
    double recovered_hz = 0.0;
};

/// Resource accounting at PRB granularity versus subcarrier granularity.
inline PartialPrbReport partial_prb_accounting(const PuncturePlan& plan, const PrbGrid& prbs)
{
    PartialPrbReport r;
    const double b = plan.config().subcarrier_bandwidth_hz;
    std::set<std::size_t> touched;
    for (int k : plan.punctured())
        touched.insert(prbs.prb_of(k));
    r.reserved_prbs.assign(touched.begin(), touched.end());

    // union of GSM bands, clipped to the reserved PRBs
    std::vector<std::pair<double, double>> gsm;
    for (const auto& g : plan.gsm_channels())
        gsm.emplace_back(g.center_hz - 0.5 * g.bandwidth_hz, g.center_hz + 0.5 * g.bandwidth_hz);
    std::sort(gsm.begin(), gsm.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& iv : gsm) {
        if (!merged.empty() && iv.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }
    double occupied = 0.0;
    for (std::size_t m : r.reserved_prbs) {
        const auto [lo, hi] = prbs.band(m);
        for (const auto& iv : merged)
            occupied += std::max(0.0, std::min(hi, iv.second) - std::max(lo, iv.first));
    }
    const double guard_bw = static_cast<double>(plan.guard_subcarriers().size()) * b;
    r.unutilized_hz = std::max(0.0, static_cast<double>(r.reserved_prbs.size()) * prbs.prb_bandwidth_hz()
                                        - occupied - guard_bw);

    for (std::size_t m : r.reserved_prbs) {
        FractionalPrb f;
        f.prb = m;
        for (int k : prbs.subcarriers(m)) {
            if (plan.is_guard(k))
                ++f.guard;
            else if (plan.is_punctured(k))
                ++f.reserved;
            else
                ++f.usable;
        }
        if (f.usable > 0) {
            r.fractional.push_back(f);
            r.recovered_subcarriers += f.usable;
        }
    }
    r.recovered_prb_equivalents = r.recovered_subcarriers / static_cast<double>(PrbGrid::kSubcarriersPerPrb);
    r.recovered_hz = r.recovered_subcarriers * b;
    return r;
}

} // namespace dsr
