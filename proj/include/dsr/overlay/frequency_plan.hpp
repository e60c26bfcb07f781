#pragma once

#include <array>
#include <string>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/geometry/hex_layout.hpp"
#include "dsr/spectral/reference_layout.hpp"

namespace dsr {

/// One 200 kHz GSM carrier, e.g. B2.
struct Carrier {
    char group = 'A';
    int index = 1;  ///< 1..3
    double center_hz = 0.0;

    std::string name() const { return std::string(1, group) + std::to_string(index); }
    bool operator==(const Carrier& o) const { return group == o.group && index == o.index; }
};

struct SectorCarriers {
    Carrier bcch;
    Carrier traffic;
    std::vector<Carrier> reusable;   ///< foreign BCCH carriers usable at low power
    std::vector<Carrier> forbidden;  ///< other carriers LTE must leave alone
};

/**
 * BCCH groups A/B/C follow the three-colouring of the cells (reuse 3/9),
 * sector s of every cell owns BCCH X(s+1) and traffic carrier D(s+1)
 * (reuse 1/3).
 */
class FrequencyPlan {
public:
    FrequencyPlan(const HexLayout& layout, std::array<GsmGroup, 4> groups)
        : layout_(layout), groups_(groups)
    {
        if (layout.sectors_per_cell() != kCarriersPerGroup)
            throw ConfigError("the reuse plan needs exactly 3 sectors per cell");
        for (std::size_t s = 0; s < layout.sector_count(); ++s) {
            const auto cell = layout.cell_of_sector(s);
            const int ls = layout.local_sector(s);
            const int color = layout.cell_color(cell);
            SectorCarriers sc;
            sc.bcch = carrier(groups_[static_cast<std::size_t>(color)], ls + 1);
            sc.traffic = carrier(groups_[3], ls + 1);
            for (int g = 0; g < 3; ++g) {
                for (int i = 1; i <= kCarriersPerGroup; ++i) {
                    const auto c = carrier(groups_[static_cast<std::size_t>(g)], i);
                    if (g != color)
                        sc.reusable.push_back(c);
                    else if (!(c == sc.bcch))
                        sc.forbidden.push_back(c);
                }
            }
            for (int i = 1; i <= kCarriersPerGroup; ++i)
                if (i != ls + 1)
                    sc.forbidden.push_back(carrier(groups_[3], i));
            sectors_.push_back(sc);
        }
    }

    const HexLayout& layout() const { return layout_; }
    const std::array<GsmGroup, 4>& groups() const { return groups_; }
    const SectorCarriers& sector(std::size_t s) const { return sectors_.at(s); }
    std::size_t sector_count() const { return sectors_.size(); }

    /// Every carrier of the plan, grouped A1..D3.
    std::vector<Carrier> all_carriers() const
    {
        std::vector<Carrier> out;
        for (const auto& g : groups_)
            for (int i = 1; i <= kCarriersPerGroup; ++i)
                out.push_back(carrier(g, i));
        return out;
    }

    static Carrier carrier(const GsmGroup& g, int i) { return Carrier{g.label, i, group_carrier_hz(g, i)}; }

private:
    HexLayout layout_;
    std::array<GsmGroup, 4> groups_;
    std::vector<SectorCarriers> sectors_;
};

inline FrequencyPlan build_reuse_plan(const HexLayout& layout, std::array<GsmGroup, 4> groups = default_gsm_groups())
{
    return FrequencyPlan(layout, groups);
}

} // namespace dsr
