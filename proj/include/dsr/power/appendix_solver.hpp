#pragma once

#include <algorithm>
#include <vector>

#include "dsr/power/problem.hpp"
#include "dsr/power/waterfilling.hpp"

namespace dsr {

/// Per-step record of the search, mostly for diagnostics.
struct AppendixTrace {
    std::vector<int> candidates;  ///< Psi after screening
    std::vector<double> rates;    ///< R_j for each candidate, same order
};

/**
 * Waterfilling-based face search. Screens each mask row against the
 * budget waterfill p^0, waterfills every violated row on its own and
 * returns the candidate with the largest rate. The pick is checked
 * against every row afterwards and reported as-is.
 */
inline PowerAllocation solve_appendix(const AllocationProblem& prob, AppendixTrace* trace = nullptr)
{
    prob.validate();
    const std::size_t M = prob.constraints.size();

    std::vector<int> psi;
    for (std::size_t j = 0; j <= M; ++j)
        psi.push_back(static_cast<int>(j));

    std::vector<PowerAllocation> cand(M + 1);
    cand[0] = waterfill_budget(prob.noise, prob.p_max);
    std::vector<double> rate(M + 1, 0.0);
    rate[0] = cand[0].objective;

    for (std::size_t j = 1; j <= M; ++j) {
        const auto& row = prob.constraints[j - 1];
        if (constraint_load(prob, cand[0].powers, static_cast<int>(j)) <= row.threshold) {
            psi.erase(std::find(psi.begin(), psi.end(), static_cast<int>(j)));
            continue;
        }
        cand[j] = waterfill_constraint(prob.noise, row.weights, row.threshold);
        rate[j] = cand[j].objective;
    }

    int best = psi.front();
    for (int j : psi)
        if (rate[static_cast<std::size_t>(j)] > rate[static_cast<std::size_t>(best)])
            best = j;

    if (trace) {
        trace->candidates = psi;
        trace->rates.clear();
        for (int j : psi)
            trace->rates.push_back(rate[static_cast<std::size_t>(j)]);
    }

    PowerAllocation out = cand[static_cast<std::size_t>(best)];
    out.active_face = best;
    out.objective = spectral_efficiency(out.powers, prob.noise);
    out.violated = violated_constraints(prob, out.powers);
    out.feasible = out.violated.empty();
    out.solver = "appendix";
    out.iterations = psi.size();
    return out;
}

} // namespace dsr
