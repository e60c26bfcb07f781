#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "dsr/common/errors.hpp"

namespace dsr {

/// Uniform sampling of baseband frequency, endpoints included.
class FrequencyGrid {
public:
    FrequencyGrid(double f_min, double f_max, double step)
        : f_min_(f_min), f_max_(f_max), step_(step)
    {
        if (!(f_min < f_max) || !(step > 0.0) || !std::isfinite(f_min) || !std::isfinite(f_max))
            throw ConfigError("frequency grid needs f_min < f_max and step > 0");
        const double n = (f_max - f_min) / step;
        const double rn = std::round(n);
        if (std::abs(n - rn) > 1e-6 * std::max(1.0, rn))
            throw ConfigError("frequency grid span is not an integer number of steps");
        count_ = static_cast<std::size_t>(rn) + 1;
    }

    /// Default analysis grid: 10 MHz channel, 1 kHz resolution.
    static FrequencyGrid lte_default() { return FrequencyGrid(-5e6, 5e6, 1e3); }

    double f_min() const { return f_min_; }
    double f_max() const { return f_max_; }
    double step() const { return step_; }
    std::size_t size() const { return count_; }
    double frequency(std::size_t i) const { return f_min_ + step_ * static_cast<double>(i); }

    std::vector<double> frequencies() const
    {
        std::vector<double> f(count_);
        for (std::size_t i = 0; i < count_; ++i)
            f[i] = frequency(i);
        return f;
    }

    bool operator==(const FrequencyGrid& o) const
    {
        return f_min_ == o.f_min_ && f_max_ == o.f_max_ && step_ == o.step_;
    }

private:
    double f_min_;
    double f_max_;
    double step_;
    std::size_t count_ = 0;
};

/// PSD sampled on a grid (W/Hz), linear between samples and zero outside.
class SpectralDensity {
public:
    explicit SpectralDensity(FrequencyGrid grid)
        : grid_(grid), values_(grid.size(), 0.0)
    {
    }

    SpectralDensity(FrequencyGrid grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values))
    {
        if (values_.size() != grid_.size())
            throw ContractViolation("PSD sample count does not match grid");
        for (double v : values_)
            if (!(v >= 0.0) || !std::isfinite(v))
                throw ContractViolation("PSD samples must be finite and non-negative");
    }

    const FrequencyGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    /// Linear interpolation; zero outside the grid.
    double value_at(double f) const
    {
        const double x = (f - grid_.f_min()) / grid_.step();
        if (x < 0.0 || x > static_cast<double>(values_.size() - 1))
            return 0.0;
        const auto i = std::min(static_cast<std::size_t>(x), values_.size() - 2);
        const double t = x - static_cast<double>(i);
        return values_[i] * (1.0 - t) + values_[i + 1] * t;
    }

    /// Trapezoidal total power (W).
    double total_power() const { return integrate(grid_.f_min(), grid_.f_max()); }

    /// Exact integral of the piecewise-linear PSD over [a, b] (W).
    double integrate(double a, double b) const
    {
        a = std::max(a, grid_.f_min());
        b = std::min(b, grid_.f_max());
        if (!(a < b))
            return 0.0;
        const double h = grid_.step();
        const auto last = values_.size() - 1;
        auto idx = [&](double f) {
            const double x = (f - grid_.f_min()) / h;
            return std::min(static_cast<std::size_t>(std::max(0.0, std::floor(x))), last - 1);
        };
        double sum = 0.0;
        const std::size_t ia = idx(a);
        const std::size_t ib = idx(b);
        for (std::size_t i = ia; i <= ib; ++i) {
            const double lo = std::max(a, grid_.frequency(i));
            const double hi = std::min(b, grid_.frequency(i + 1));
            if (hi > lo)
                sum += 0.5 * (value_at(lo) + value_at(hi)) * (hi - lo);
        }
        return sum;
    }

    SpectralDensity& operator+=(const SpectralDensity& o)
    {
        if (!(grid_ == o.grid_))
            throw ContractViolation("cannot add PSDs on different grids");
        for (std::size_t i = 0; i < values_.size(); ++i)
            values_[i] += o.values_[i];
        return *this;
    }

    /// CSV export, header freq_hz,psd_w_per_hz.
    void write_csv(std::ostream& os) const
    {
        os << "freq_hz,psd_w_per_hz\n";
        char buf[96];
        for (std::size_t i = 0; i < values_.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.3f,%.9e\n", grid_.frequency(i), values_[i]);
            os << buf;
        }
    }

private:
    FrequencyGrid grid_;
    std::vector<double> values_;
};

inline SpectralDensity operator+(SpectralDensity a, const SpectralDensity& b)
{
    a += b;
    return a;
}

} // namespace dsr
