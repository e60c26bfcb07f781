#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/common/math.hpp"

namespace dsr {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Where a point falls: cell and global sector index (cell * sectors + s).
struct SectorRef {
    std::size_t cell = 0;
    std::size_t sector = 0;
};

/**
 * Flat-top hexagonal cells on an offset-column lattice, one site per cell
 * at its centre, sectors_per_cell sectors with evenly spaced boresights
 * starting at 0 rad.
 */
class HexLayout {
public:
    HexLayout(int rows = 6, int cols = 6, double edge_m = 500.0, int sectors_per_cell = 3)
        : rows_(rows), cols_(cols), edge_(edge_m), sectors_(sectors_per_cell)
    {
        if (rows < 1 || cols < 1)
            throw ConfigError("layout needs at least one row and one column");
        if (!(edge_m > 0.0))
            throw ConfigError("cell edge length must be positive");
        if (sectors_per_cell < 1)
            throw ConfigError("sectors per cell must be at least 1");
        double cx = 0.0, cy = 0.0;
        for (std::size_t c = 0; c < cell_count(); ++c) {
            cx += cell_center(c).x;
            cy += cell_center(c).y;
        }
        cx /= static_cast<double>(cell_count());
        cy /= static_cast<double>(cell_count());
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cell_count(); ++c) {
            const auto p = cell_center(c);
            const double d = std::hypot(p.x - cx, p.y - cy);
            if (d < best - 1e-9) {
                best = d;
                center_ = c;
            }
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double edge_m() const { return edge_; }
    int sectors_per_cell() const { return sectors_; }
    std::size_t cell_count() const { return static_cast<std::size_t>(rows_ * cols_); }
    std::size_t sector_count() const { return cell_count() * static_cast<std::size_t>(sectors_); }

    int row_of(std::size_t cell) const { return static_cast<int>(cell) / cols_; }
    int col_of(std::size_t cell) const { return static_cast<int>(cell) % cols_; }

    Point cell_center(std::size_t cell) const
    {
        const int r = row_of(cell), c = col_of(cell);
        return {1.5 * edge_ * c, std::sqrt(3.0) * edge_ * (r + 0.5 * (c & 1))};
    }

    /// Cell nearest the layout centroid, used for statistics.
    std::size_t center_cell() const { return center_; }

    /// Colour in {0,1,2} such that neighbouring cells always differ.
    int cell_color(std::size_t cell) const
    {
        const int c = col_of(cell), r = row_of(cell);
        const int q = c;
        const int ax_r = r - (c - (c & 1)) / 2;
        return (((q - ax_r) % 3) + 3) % 3;
    }

    std::size_t sector_index(std::size_t cell, int s) const
    {
        return cell * static_cast<std::size_t>(sectors_) + static_cast<std::size_t>(s);
    }
    std::size_t cell_of_sector(std::size_t sector) const { return sector / static_cast<std::size_t>(sectors_); }
    int local_sector(std::size_t sector) const { return static_cast<int>(sector % static_cast<std::size_t>(sectors_)); }

    double boresight_rad(int s) const { return 2.0 * kPi * s / sectors_; }

    /// Neighbouring cells (shared hexagon edge).
    std::vector<std::size_t> neighbors(std::size_t cell) const
    {
        std::vector<std::size_t> out;
        const auto p = cell_center(cell);
        for (std::size_t c = 0; c < cell_count(); ++c) {
            if (c == cell)
                continue;
            const auto q = cell_center(c);
            if (std::abs(std::hypot(q.x - p.x, q.y - p.y) - std::sqrt(3.0) * edge_) < 1e-6 * edge_)
                out.push_back(c);
        }
        return out;
    }

    /// Inside the hexagon of cell (boundary inclusive).
    bool in_cell(std::size_t cell, const Point& pt) const
    {
        const auto c = cell_center(cell);
        const double dx = std::abs(pt.x - c.x), dy = std::abs(pt.y - c.y);
        const double h = 0.5 * std::sqrt(3.0) * edge_;
        return dy <= h * (1 + 1e-12) && std::sqrt(3.0) * dx + dy <= std::sqrt(3.0) * edge_ * (1 + 1e-12);
    }

    /// Local sector whose angular wedge contains the direction from site to pt.
    int wedge_of(std::size_t cell, const Point& pt) const
    {
        const auto c = cell_center(cell);
        double a = std::atan2(pt.y - c.y, pt.x - c.x);
        const double width = 2.0 * kPi / sectors_;
        a += 0.5 * width;  // wedge s covers [boresight - w/2, boresight + w/2)
        a = std::fmod(a, 2.0 * kPi);
        if (a < 0)
            a += 2.0 * kPi;
        return static_cast<int>(a / width) % sectors_;
    }

    bool in_sector(std::size_t sector, const Point& pt) const
    {
        const auto cell = cell_of_sector(sector);
        return in_cell(cell, pt) && wedge_of(cell, pt) == local_sector(sector);
    }

    /// Nearest site's cell, then the wedge; total on the plane.
    SectorRef locate(const Point& pt) const
    {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < cell_count(); ++c) {
            const auto q = cell_center(c);
            const double d = std::hypot(q.x - pt.x, q.y - pt.y);
            if (d < bd) {
                bd = d;
                best = c;
            }
        }
        return {best, sector_index(best, wedge_of(best, pt))};
    }

private:
    int rows_;
    int cols_;
    double edge_;
    int sectors_;
    std::size_t center_ = 0;
};

} // namespace dsr
