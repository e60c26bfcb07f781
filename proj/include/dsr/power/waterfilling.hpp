#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/power/problem.hpp"

namespace dsr {

inline constexpr double kWaterLevelFloor = 1e-30;
inline constexpr int kWaterBisections = 200;

/// Water level L with sum_i (L - x_i)^+ = target, by bisection.
inline double water_level(const std::vector<double>& floors, double target)
{
    double lo = kWaterLevelFloor;
    double hi = *std::max_element(floors.begin(), floors.end()) + target;
    for (int it = 0; it < kWaterBisections; ++it) {
        const double mid = 0.5 * (lo + hi);
        double s = 0.0;
        for (double x : floors)
            s += std::max(0.0, mid - x);
        (s > target ? hi : lo) = mid;
        if (hi - lo <= 1e-16 * hi)
            break;
    }
    return 0.5 * (lo + hi);
}

/// p_i = (L - N_i)^+ with sum p_i = p_max.
inline PowerAllocation waterfill_budget(const std::vector<double>& noise, double p_max)
{
    if (noise.empty() || !(p_max > 0.0))
        throw ContractViolation("budget waterfill needs subcarriers and a positive budget");
    for (double n : noise)
        if (!(n > 0.0))
            throw ContractViolation("noise entries must be positive");
    const double level = water_level(noise, p_max);
    PowerAllocation a;
    a.powers.resize(noise.size());
    for (std::size_t i = 0; i < noise.size(); ++i)
        a.powers[i] = std::max(0.0, level - noise[i]);
    a.objective = spectral_efficiency(a.powers, noise);
    a.active_face = 0;
    a.feasible = true;
    a.solver = "waterfill_budget";
    return a;
}

/**
 * p_i = (1/(W_i lambda) - N_i)^+ with sum W_i p_i = c. Subcarriers with
 * W_i = 0 are left at zero power and listed as unconstrained.
 */
inline PowerAllocation waterfill_constraint(const std::vector<double>& noise, const std::vector<double>& weights,
                                            double c)
{
    if (noise.size() != weights.size() || noise.empty())
        throw ContractViolation("constraint waterfill needs matching noise and weight vectors");
    if (!(c > 0.0))
        throw ContractViolation("constraint threshold must be positive");
    // in units of the weighted power W_i p_i the floors are W_i N_i
    std::vector<double> floors;
    std::vector<std::size_t> idx;
    PowerAllocation a;
    for (std::size_t i = 0; i < noise.size(); ++i) {
        if (weights[i] < 0.0)
            throw ContractViolation("constraint weights must be non-negative");
        if (weights[i] > 0.0) {
            floors.push_back(weights[i] * noise[i]);
            idx.push_back(i);
        } else {
            a.unconstrained.push_back(i);
        }
    }
    if (floors.empty())
        throw ContractViolation("degenerate constraint: all weights are zero");
    const double level = water_level(floors, c);
    a.powers.assign(noise.size(), 0.0);
    for (std::size_t t = 0; t < idx.size(); ++t)
        a.powers[idx[t]] = std::max(0.0, level - floors[t]) / weights[idx[t]];
    a.objective = spectral_efficiency(a.powers, noise);
    a.feasible = true;
    a.solver = "waterfill_constraint";
    return a;
}

} // namespace dsr
