#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "dsr/geometry.hpp"

using namespace dsr;

TEST(Antenna, Examples)
{
    EXPECT_DOUBLE_EQ(antenna_gain(0.0), 1.0);
    EXPECT_NEAR(antenna_gain(std::numbers::pi), 0.0, 1e-16);
    const double u = 0.72 * std::numbers::pi;
    EXPECT_NEAR(antenna_gain(std::numbers::pi / 2), 0.5 * std::sin(u) / u, 1e-15);
    EXPECT_NEAR(antenna_gain(std::numbers::pi / 2), 0.1703, 1e-4);
}

TEST(Antenna, EvenBoundedUniqueMax)
{
    for (double phi = -std::numbers::pi; phi <= std::numbers::pi; phi += 1e-3) {
        const double g = antenna_gain(phi);
        EXPECT_GE(g, 0.0);
        EXPECT_LE(g, 1.0);
        EXPECT_NEAR(g, antenna_gain(-phi), 1e-15);
        if (std::abs(phi) > 1e-6) {
            EXPECT_LT(g, 1.0);
        }
    }
    for (double phi = 0; phi + 1e-3 <= std::numbers::pi; phi += 1e-3)
        EXPECT_GT(antenna_gain(phi), antenna_gain(phi + 1e-3));
}

TEST(PathGain, Examples)
{
    const PropagationModel m;
    const double fs = std::pow(0.375 / (4 * std::numbers::pi), 2);
    EXPECT_NEAR(path_gain(1.0, m), fs, 1e-18);
    EXPECT_NEAR(10 * std::log10(path_gain(200, m) / path_gain(100, m)), -30 * std::log10(2.0), 1e-12);
    EXPECT_NEAR(10 * std::log10(path_gain(100, m, 6.0) / path_gain(100, m)), 6.0, 1e-12);
    EXPECT_EQ(path_gain(0.2, m), path_gain(1.0, m));
}

TEST(PathGain, StrictlyDecreasing)
{
    const PropagationModel m;
    for (double d = 1; d < 5000; d *= 1.1)
        EXPECT_GT(path_gain(d, m, 2.0), path_gain(d * 1.1, m, 2.0));
}

TEST(Propagation, Validation)
{
    PropagationModel m;
    m.alpha = 2.0;
    EXPECT_THROW(m.validate(), ConfigError);
}

TEST(HexLayout, CenterCellAndLattice)
{
    const HexLayout l(6, 6, 500);
    EXPECT_EQ(l.cell_count(), 36u);
    EXPECT_EQ(l.sector_count(), 108u);
    const auto c = l.cell_center(l.center_cell());
    const auto n = l.neighbors(l.center_cell());
    EXPECT_EQ(n.size(), 6u);
    for (auto k : n) {
        const auto p = l.cell_center(k);
        EXPECT_NEAR(std::hypot(p.x - c.x, p.y - c.y), std::sqrt(3.0) * 500, 1e-9);
    }
}

TEST(HexLayout, ColoringIsProper)
{
    const HexLayout l(6, 6, 500);
    for (std::size_t c = 0; c < l.cell_count(); ++c)
        for (auto k : l.neighbors(c))
            EXPECT_NE(l.cell_color(c), l.cell_color(k));
}

TEST(HexLayout, EveryPointHasOneSector)
{
    const HexLayout l(4, 4, 500);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(0, 4 * 750), uy(0, 4 * 866);
    for (int i = 0; i < 5000; ++i) {
        const Point p{ux(rng), uy(rng)};
        const auto r = l.locate(p);
        EXPECT_EQ(l.cell_of_sector(r.sector), r.cell);
        int inside = 0;
        for (std::size_t s = 0; s < l.sector_count(); ++s)
            inside += l.in_sector(s, p);
        // points inside the layout lie in exactly one sector polygon
        if (l.in_cell(r.cell, p)) {
            EXPECT_EQ(inside, 1);
            EXPECT_TRUE(l.in_sector(r.sector, p));
        }
    }
}

TEST(UeDrop, Reproducible)
{
    const HexLayout l(3, 3, 500);
    const PropagationModel m;
    const auto a = drop_ues(l, 4, m, 42);
    const auto b = drop_ues(l, 4, m, 42);
    ASSERT_EQ(a.ues.size(), b.ues.size());
    for (std::size_t i = 0; i < a.ues.size(); ++i) {
        EXPECT_EQ(a.ues[i].pos.x, b.ues[i].pos.x);
        EXPECT_EQ(a.ues[i].pos.y, b.ues[i].pos.y);
    }
    EXPECT_EQ(a.shadow_db, b.shadow_db);
    const auto c = drop_ues(l, 4, m, 43);
    EXPECT_NE(a.ues[0].pos.x, c.ues[0].pos.x);
}

TEST(UeDrop, ContainmentAndMinimumDistance)
{
    const HexLayout l(3, 3, 500);
    const auto d = drop_ues(l, 50, PropagationModel{}, 7);
    EXPECT_EQ(d.ues.size(), 9u * 3u * 50u);
    for (const auto& u : d.ues) {
        EXPECT_TRUE(l.in_sector(u.sector, u.pos));
        const auto c = l.cell_center(u.cell);
        EXPECT_GE(std::hypot(u.pos.x - c.x, u.pos.y - c.y), kMinUeSiteDistanceM);
    }
}

TEST(UeDrop, ShadowingStatistics)
{
    const HexLayout l(1, 1, 500, 1);
    PropagationModel m;
    const auto d = drop_ues(l, 10000, m, 99);
    double s = 0, s2 = 0;
    for (const auto& row : d.shadow_db) {
        s += row[0];
        s2 += row[0] * row[0];
    }
    const double n = static_cast<double>(d.shadow_db.size());
    const double mean = s / n;
    EXPECT_NEAR(std::sqrt(s2 / n - mean * mean), 6.0, 0.2);
}

TEST(LinkBudget, BoresightBeatsOffAxis)
{
    const HexLayout l(1, 1, 500);
    PropagationModel m;
    m.shadow_var_db2 = 0;
    UeDrop d = drop_ues(l, 1, m, 1);
    d.ues.resize(2);
    d.shadow_db.assign(2, std::vector<double>(3, 0.0));
    const auto c = l.cell_center(0);
    d.ues[0] = Ue{0, 0, 0, {c.x + 200, c.y}};
    d.ues[1] = Ue{1, 0, 0, {c.x + 200 * std::cos(2.0944), c.y + 200 * std::sin(2.0944)}};
    const auto a = link_budget(d.ues[0], d, l, m);
    const auto b = link_budget(d.ues[1], d, l, m);
    EXPECT_GT(a.gain[0], b.gain[0]);
    EXPECT_EQ(a.serving, 0u);
    EXPECT_EQ(b.serving, 1u);
}

TEST(LinkBudget, ServingIsStrongestAndInterferenceFinite)
{
    const HexLayout l(4, 4, 500);
    const PropagationModel m;
    const auto d = drop_ues(l, 5, m, 11);
    for (const auto& u : d.ues) {
        const auto t = link_budget(u, d, l, m);
        double others = 0;
        for (std::size_t s = 0; s < t.gain.size(); ++s) {
            EXPECT_LE(t.gain[s], t.gain[t.serving]);
            if (s != t.serving)
                others += t.gain[s];
        }
        EXPECT_GT(others, 0.0);
        EXPECT_TRUE(std::isfinite(others));
    }
}

TEST(LinkBudget, DropCsv)
{
    const HexLayout l(2, 2, 500);
    const PropagationModel m;
    const auto d = drop_ues(l, 2, m, 5);
    std::ostringstream os;
    write_drop_csv(os, d, l, m);
    const auto s = os.str();
    EXPECT_EQ(s.substr(0, s.find('\n')), "ue_id,cell,sector,x_m,y_m,serving_sector,shadow_db");
    EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), static_cast<long>(d.ues.size() + 1));
}
