#pragma once

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "dsr/common/errors.hpp"

namespace dsr {

/// One spectral-mask row: sum_i weights[i] * p_i <= threshold.
struct MaskConstraint {
    std::vector<double> weights;  ///< W_i(f_j), 1/Hz
    double threshold = 0.0;       ///< C_j, W/Hz
    double freq_hz = 0.0;         ///< f_j
};

/// maximize sum log(1 + p_i/N_i) subject to the budget and the mask rows.
struct AllocationProblem {
    std::vector<double> noise;  ///< N_i, W
    std::vector<MaskConstraint> constraints;
    double p_max = 0.0;

    std::size_t size() const { return noise.size(); }

    std::vector<double> sample_freqs() const
    {
        std::vector<double> f;
        for (const auto& c : constraints)
            f.push_back(c.freq_hz);
        return f;
    }

    void validate() const
    {
        if (noise.empty())
            throw ContractViolation("allocation problem has no subcarriers");
        for (double n : noise)
            if (!(n > 0.0) || !std::isfinite(n))
                throw ContractViolation("noise entries must be finite and positive");
        if (!(p_max > 0.0) || !std::isfinite(p_max))
            throw ContractViolation("power budget must be positive");
        for (const auto& c : constraints) {
            if (c.weights.size() != noise.size())
                throw ContractViolation("constraint row length does not match the subcarrier count");
            if (!(c.threshold > 0.0))
                throw ContractViolation("mask thresholds must be positive");
            for (double w : c.weights)
                if (!(w >= 0.0) || !std::isfinite(w))
                    throw ContractViolation("mask weights must be finite and non-negative");
        }
    }
};

struct PowerAllocation {
    std::vector<double> powers;
    double objective = 0.0;  ///< nats
    int active_face = 0;     ///< 0 = budget, j >= 1 = mask row j
    bool feasible = false;
    std::vector<int> violated;           ///< 0 = budget, j = mask row j
    std::vector<std::size_t> unconstrained;  ///< subcarriers outside a constraint waterfill
    std::string solver;
    std::size_t iterations = 0;
};

/// Sum of log(1 + p_i/N_i), natural log.
inline double spectral_efficiency(const std::vector<double>& powers, const std::vector<double>& noise)
{
    if (powers.size() != noise.size())
        throw ContractViolation("power and noise vectors differ in length");
    double r = 0.0;
    for (std::size_t i = 0; i < powers.size(); ++i)
        r += std::log1p(powers[i] / noise[i]);
    return r;
}

inline double spectral_efficiency(const PowerAllocation& a, const std::vector<double>& noise)
{
    return spectral_efficiency(a.powers, noise);
}

/// Rows (0 = budget) violated by powers beyond rel_tol relative slack.
inline std::vector<int> violated_constraints(const AllocationProblem& prob, const std::vector<double>& powers,
                                             double rel_tol = 1e-9)
{
    std::vector<int> out;
    double total = 0.0;
    for (double p : powers) {
        if (p < 0.0)
            throw ContractViolation("negative power in allocation");
        total += p;
    }
    if (total > prob.p_max * (1.0 + rel_tol))
        out.push_back(0);
    for (std::size_t j = 0; j < prob.constraints.size(); ++j) {
        const auto& c = prob.constraints[j];
        double s = 0.0;
        for (std::size_t i = 0; i < powers.size(); ++i)
            s += c.weights[i] * powers[i];
        if (s > c.threshold * (1.0 + rel_tol))
            out.push_back(static_cast<int>(j + 1));
    }
    return out;
}

/// Load of row j (0 = budget) under powers.
inline double constraint_load(const AllocationProblem& prob, const std::vector<double>& powers, int j)
{
    double s = 0.0;
    for (std::size_t i = 0; i < powers.size(); ++i)
        s += (j == 0 ? 1.0 : prob.constraints[static_cast<std::size_t>(j - 1)].weights[i]) * powers[i];
    return s;
}

inline double constraint_limit(const AllocationProblem& prob, int j)
{
    return j == 0 ? prob.p_max : prob.constraints[static_cast<std::size_t>(j - 1)].threshold;
}

/// Per-subcarrier CSV: subcarrier_index,noise_w,power_w.
inline void write_allocation_csv(std::ostream& os, const std::vector<int>& subcarriers,
                                 const std::vector<double>& noise, const PowerAllocation& a)
{
    os << "subcarrier_index,noise_w,power_w\n";
    char buf[128];
    for (std::size_t i = 0; i < noise.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%d,%.9e,%.9e\n", subcarriers[i], noise[i], a.powers[i]);
        os << buf;
    }
}

inline void write_allocation_summary(std::ostream& os, const PowerAllocation& a)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "solver = %s\nobjective_nats = %.12g\nactive_face = %d\nfeasible = %s\n",
                  a.solver.c_str(), a.objective, a.active_face, a.feasible ? "true" : "false");
    os << buf;
    os << "violated =";
    for (int j : a.violated)
        os << ' ' << j;
    os << "\niterations = " << a.iterations << '\n';
}

} // namespace dsr
