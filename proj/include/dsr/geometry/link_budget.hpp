#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "dsr/geometry/antenna.hpp"
#include "dsr/geometry/hex_layout.hpp"
#include "dsr/geometry/propagation.hpp"
#include "dsr/geometry/ue_drop.hpp"

namespace dsr {

/// Linear gain from every sector to one UE.
struct LinkTable {
    std::vector<double> gain;  ///< per global sector
    std::size_t serving = 0;   ///< strongest sector
};

/// Angle of pt seen from the site of sector, relative to its boresight.
inline double off_boresight(const HexLayout& layout, std::size_t sector, const Point& pt)
{
    const auto c = layout.cell_center(layout.cell_of_sector(sector));
    const double a = std::atan2(pt.y - c.y, pt.x - c.x);
    return wrap_angle(a - layout.boresight_rad(layout.local_sector(sector)));
}

inline LinkTable link_budget(const Ue& ue, const UeDrop& drop, const HexLayout& layout, const PropagationModel& model)
{
    LinkTable t;
    t.gain.resize(layout.sector_count());
    double best = -1.0;
    for (std::size_t s = 0; s < layout.sector_count(); ++s) {
        const auto c = layout.cell_center(layout.cell_of_sector(s));
        const double d = std::hypot(ue.pos.x - c.x, ue.pos.y - c.y);
        t.gain[s] = path_gain(d, model, drop.shadow_db[ue.id][s]) * antenna_gain(off_boresight(layout, s, ue.pos));
        if (t.gain[s] > best) {
            best = t.gain[s];
            t.serving = s;
        }
    }
    return t;
}

/// Drop export: ue_id,cell,sector,x_m,y_m,serving_sector,shadow_db (shadowing on the serving link).
inline void write_drop_csv(std::ostream& os, const UeDrop& drop, const HexLayout& layout, const PropagationModel& model)
{
    os << "ue_id,cell,sector,x_m,y_m,serving_sector,shadow_db\n";
    char buf[160];
    for (const auto& u : drop.ues) {
        const auto t = link_budget(u, drop, layout, model);
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.3f,%.3f,%zu,%.6f\n", u.id, u.cell, u.sector, u.pos.x, u.pos.y,
                      t.serving, drop.shadow_db[u.id][t.serving]);
        os << buf;
    }
}

} // namespace dsr
