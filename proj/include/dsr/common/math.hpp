#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include <gsl/gsl_sf_expint.h>

namespace dsr {

inline constexpr double kPi = std::numbers::pi;

/// Normalized sinc, sin(pi x)/(pi x).
inline double sinc(double x)
{
    if (std::abs(x) < 1e-8)
        return 1.0 - (kPi * kPi * x * x) / 6.0;
    const double px = kPi * x;
    return std::sin(px) / px;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin)
{
    if (lin <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(lin);
}

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

/// Sine integral Si(x).
inline double sine_integral(double x) { return gsl_sf_Si(x); }

/**
 * Antiderivative of sinc^2: F(x) = integral_0^x sinc^2(u) du.
 * F(+inf) = 1/2.
 */
inline double sinc2_primitive(double x)
{
    if (std::abs(x) < 1e-6)
        return x;
    const double s = std::sin(kPi * x);
    return sine_integral(2.0 * kPi * x) / kPi - s * s / (kPi * kPi * x);
}

} // namespace dsr
