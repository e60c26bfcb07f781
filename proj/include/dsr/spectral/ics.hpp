#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include <gsl/gsl_sf_expint.h>

#include "dsr/common/errors.hpp"
#include "dsr/common/math.hpp"
#include "dsr/spectral/frequency_grid.hpp"

namespace dsr {

/// Behaviour of a sampled PSD beyond its grid.
enum class Extension {
    Zero,  ///< no power outside the grid
    Flat,  ///< edge samples continue to +-infinity
};

namespace detail {

/// Cin(z) = integral_0^z (1 - cos t)/t dt.
inline double cin(double z)
{
    z = std::abs(z);
    if (z < 1.0) {
        // alternating series, |terms| fall off like z^2k/(2k (2k)!)
        double term = 1.0;
        double sum = 0.0;
        const double z2 = z * z;
        for (int k = 1; k < 12; ++k) {
            term *= z2 / ((2.0 * k - 1.0) * (2.0 * k));
            sum += (k % 2 ? 1.0 : -1.0) * term / (2.0 * k);
        }
        return sum;
    }
    return std::numbers::egamma + std::log(z) - gsl_sf_Ci(z);
}

/// Primitive of x*sinc^2(x), even in x.
inline double xsinc2_primitive(double x) { return cin(2.0 * kPi * x) / (2.0 * kPi * kPi); }

/// Primitives F (of sinc^2) and G (of x sinc^2) tabulated at x_j.
struct KernelPrimitives {
    std::vector<double> x, F, G;
};

inline KernelPrimitives primitives_at(std::vector<double> x)
{
    KernelPrimitives p;
    p.F.resize(x.size());
    p.G.resize(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        p.F[j] = sinc2_primitive(x[j]);
        p.G[j] = xsinc2_primitive(x[j]);
    }
    p.x = std::move(x);
    return p;
}

/// Integral over [x_a, x_b] of the rising ramp (x - x_a)/(x_b - x_a) against sinc^2.
inline double rising(const KernelPrimitives& p, std::size_t a, std::size_t b)
{
    const double d = p.x[b] - p.x[a];
    return ((p.G[b] - p.G[a]) - p.x[a] * (p.F[b] - p.F[a])) / d;
}

/// Integral over [x_a, x_b] of the falling ramp (x_b - x)/(x_b - x_a) against sinc^2.
inline double falling(const KernelPrimitives& p, std::size_t a, std::size_t b)
{
    const double d = p.x[b] - p.x[a];
    return (p.x[b] * (p.F[b] - p.F[a]) - (p.G[b] - p.G[a])) / d;
}

inline void check_inputs(const SpectralDensity& psd, double T_s)
{
    if (!(T_s > 0.0) || !std::isfinite(T_s))
        throw NumericError("virtual PSD needs a finite positive symbol time");
    for (double v : psd.values())
        if (!std::isfinite(v))
            throw NumericError("virtual PSD input is not finite");
}

/**
 * Weight of sample j when the PSD is convolved with T_s sinc^2(T_s(f - f*)),
 * given primitives at x_j = T_s (f_j - f*). Exact for the piecewise-linear
 * interpolant of the samples.
 */
inline double hat_weight(const KernelPrimitives& p, std::size_t j, std::size_t n)
{
    double w = 0.0;
    if (j > 0)
        w += rising(p, j - 1, j);
    if (j + 1 < n)
        w += falling(p, j, j + 1);
    return w;
}

inline double flat_tails(const SpectralDensity& psd, double T_s, double f_star)
{
    const double left = psd.values().front();
    const double right = psd.values().back();
    const double a = T_s * (psd.grid().f_min() - f_star);
    const double b = T_s * (psd.grid().f_max() - f_star);
    return left * (0.5 + sinc2_primitive(a)) + right * (0.5 - sinc2_primitive(b));
}

} // namespace detail

/**
 * Virtual PSD seen through an OFDM window of duration T_s:
 * integral of S(f) T_s sinc^2(T_s (f - f_star)) df.
 */
inline double virtual_psd(const SpectralDensity& real_psd, double T_s, double f_star,
                          Extension ext = Extension::Zero)
{
    detail::check_inputs(real_psd, T_s);
    if (!std::isfinite(f_star))
        throw NumericError("virtual PSD probe frequency is not finite");
    const auto& g = real_psd.grid();
    const std::size_t n = g.size();
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j)
        x[j] = T_s * (g.frequency(j) - f_star);
    const auto p = detail::primitives_at(std::move(x));
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        if (real_psd[j] != 0.0)
            sum += real_psd[j] * detail::hat_weight(p, j, n);
    if (ext == Extension::Flat)
        sum += detail::flat_tails(real_psd, T_s, f_star);
    if (!std::isfinite(sum))
        throw NumericError("virtual PSD integral is not finite");
    return std::max(sum, 0.0);
}

/**
 * Virtual PSD on every point of out. Uses a shared kernel table when out is
 * aligned with the input grid, otherwise falls back to per-probe evaluation.
 */
inline SpectralDensity virtual_psd_on(const SpectralDensity& real_psd, double T_s, const FrequencyGrid& out,
                                      Extension ext = Extension::Zero)
{
    detail::check_inputs(real_psd, T_s);
    const auto& g = real_psd.grid();
    const double h = g.step();
    const double shift = (out.f_min() - g.f_min()) / h;
    const bool aligned = std::abs(out.step() - h) < 1e-9 * h && std::abs(shift - std::round(shift)) < 1e-9;
    std::vector<double> v(out.size(), 0.0);
    if (!aligned) {
        for (std::size_t i = 0; i < out.size(); ++i)
            v[i] = virtual_psd(real_psd, T_s, out.frequency(i), ext);
        return SpectralDensity(out, std::move(v));
    }

    const long n = static_cast<long>(g.size());
    const long m = static_cast<long>(out.size());
    const long off = std::lround(shift);
    // input sample j, output sample i: index difference d = j - (i + off)
    const long dmin = -(m - 1 + off) - 1;
    const long dmax = (n - 1) - off + 1;
    std::vector<double> x(static_cast<std::size_t>(dmax - dmin + 1));
    for (long d = dmin; d <= dmax; ++d)
        x[static_cast<std::size_t>(d - dmin)] = T_s * h * static_cast<double>(d);
    const auto p = detail::primitives_at(std::move(x));
    const std::size_t nd = p.x.size();
    // interior weight (both ramps) and one-sided edge weights by difference
    std::vector<double> both(nd, 0.0), up(nd, 0.0), down(nd, 0.0);
    for (std::size_t t = 0; t < nd; ++t) {
        if (t > 0)
            up[t] = detail::rising(p, t - 1, t);
        if (t + 1 < nd)
            down[t] = detail::falling(p, t, t + 1);
        both[t] = up[t] + down[t];
    }
    const auto& s = real_psd.values();
    for (long i = 0; i < m; ++i) {
        const long base = -(i + off) - dmin;
        double sum = 0.0;
        for (long j = 0; j < n; ++j) {
            const double sj = s[static_cast<std::size_t>(j)];
            if (sj == 0.0)
                continue;
            const auto t = static_cast<std::size_t>(j + base);
            const double w = j == 0 ? down[t] : (j == n - 1 ? up[t] : both[t]);
            sum += sj * w;
        }
        if (ext == Extension::Flat)
            sum += detail::flat_tails(real_psd, T_s, out.frequency(static_cast<std::size_t>(i)));
        if (!std::isfinite(sum))
            throw NumericError("virtual PSD integral is not finite");
        v[static_cast<std::size_t>(i)] = std::max(sum, 0.0);
    }
    return SpectralDensity(out, std::move(v));
}

/// Grabbed in-band power at subcarrier k: virtual PSD integrated over its band (W).
inline double grabbed_inband_power(const SpectralDensity& virtual_psd_samples, int k, double b)
{
    return virtual_psd_samples.integrate((k - 0.5) * b, (k + 0.5) * b);
}

} // namespace dsr
