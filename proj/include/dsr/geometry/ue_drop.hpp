#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <random>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/geometry/hex_layout.hpp"
#include "dsr/geometry/propagation.hpp"

namespace dsr {

struct Ue {
    std::size_t id = 0;
    std::size_t cell = 0;
    std::size_t sector = 0;  ///< global sector the UE was dropped in
    Point pos;
};

/// UE positions and per-link shadowing for one Monte-Carlo realisation.
struct UeDrop {
    std::vector<Ue> ues;
    std::vector<std::vector<double>> shadow_db;  ///< [ue][global sector]
    std::uint64_t seed = 0;
};

inline constexpr double kMinUeSiteDistanceM = 35.0;

/// Independent generator for stream `stream` of a base seed.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t tag = 0)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(tag)};
    return std::mt19937_64(seq);
}

/**
 * count_per_sector UEs uniformly over every sector area (rejection from the
 * hexagon's bounding box), at least min_site_distance_m from the site, and
 * i.i.d. shadowing on every UE-sector link.
 */
inline UeDrop drop_ues(const HexLayout& layout, int count_per_sector, const PropagationModel& model,
                       std::uint64_t seed, double min_site_distance_m = kMinUeSiteDistanceM)
{
    if (count_per_sector < 1)
        throw ConfigError("at least one UE per sector is required");
    model.validate();
    UeDrop d;
    d.seed = seed;
    auto rng = make_stream(seed, 0, 1);
    const double R = layout.edge_m();
    const double h = 0.5 * std::sqrt(3.0) * R;
    std::uniform_real_distribution<double> ux(-R, R), uy(-h, h);
    for (std::size_t s = 0; s < layout.sector_count(); ++s) {
        const auto cell = layout.cell_of_sector(s);
        const auto c = layout.cell_center(cell);
        for (int k = 0; k < count_per_sector; ++k) {
            Point p;
            for (;;) {
                p = {c.x + ux(rng), c.y + uy(rng)};
                if (std::hypot(p.x - c.x, p.y - c.y) >= min_site_distance_m && layout.in_sector(s, p))
                    break;
            }
            d.ues.push_back(Ue{d.ues.size(), cell, s, p});
        }
    }
    auto srng = make_stream(seed, 0, 2);
    std::normal_distribution<double> n(0.0, model.shadow_std_db());
    d.shadow_db.assign(d.ues.size(), std::vector<double>(layout.sector_count(), 0.0));
    for (auto& row : d.shadow_db)
        for (auto& v : row)
            v = model.shadow_var_db2 > 0.0 ? n(srng) : 0.0;
    return d;
}

} // namespace dsr
