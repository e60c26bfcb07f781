#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "dsr/common/errors.hpp"

namespace dsr {

struct UeState {
    double T = 0.0;                ///< filtered throughput, bit/s
    double served_bits = 0.0;      ///< over the statistics window
    std::array<std::uint64_t, 4> class_wins{};  ///< PRB-TTIs won, by PrbClass
};

struct TtiResult {
    std::vector<int> winner;          ///< per PRB, -1 when idle
    std::vector<double> rate;         ///< winner's rate on the PRB, bit/s
    std::vector<double> served_bits;  ///< per UE
    std::size_t idle = 0;             ///< usable PRBs nobody took
};

/// rates[k][m] in bit/s; usable[m] false for PRBs the sector does not transmit.
using RateMatrix = std::vector<std::vector<double>>;

/// Floor on T_k, bit/s; keeps the PF metric finite.
inline constexpr double kMinThroughputBps = 1.0;

namespace detail {

inline TtiResult empty_result(std::size_t K, std::size_t M)
{
    TtiResult r;
    r.winner.assign(M, -1);
    r.rate.assign(M, 0.0);
    r.served_bits.assign(K, 0.0);
    return r;
}

inline void check_shape(const RateMatrix& rates, const std::vector<char>& usable)
{
    for (const auto& row : rates)
        if (row.size() != usable.size())
            throw ContractViolation("rate matrix width differs from PRB count");
}

} // namespace detail

/// PRB m to UE (m + offset) mod K; used to seed T_k before PF starts.
inline TtiResult round_robin_schedule(const RateMatrix& rates, const std::vector<char>& usable, double tti_s,
                                      std::size_t offset = 0)
{
    detail::check_shape(rates, usable);
    const std::size_t K = rates.size(), M = usable.size();
    auto r = detail::empty_result(K, M);
    std::size_t next = offset;
    for (std::size_t m = 0; m < M; ++m) {
        if (!usable[m])
            continue;
        if (K == 0) {
            ++r.idle;
            continue;
        }
        const std::size_t k = next++ % K;
        r.winner[m] = static_cast<int>(k);
        r.rate[m] = rates[k][m];
        r.served_bits[k] += rates[k][m] * tti_s;
    }
    return r;
}

/// Per-PRB argmax of R_k^m / T_k, exact ties broken uniformly with rng.
template <class Rng>
TtiResult pf_schedule(const RateMatrix& rates, const std::vector<UeState>& states, const std::vector<char>& usable,
                      double tti_s, Rng& rng)
{
    detail::check_shape(rates, usable);
    const std::size_t K = rates.size(), M = usable.size();
    if (states.size() != K)
        throw ContractViolation("one state per UE required");
    auto r = detail::empty_result(K, M);
    std::vector<std::size_t> ties;
    for (std::size_t m = 0; m < M; ++m) {
        if (!usable[m])
            continue;
        double best = -1.0;
        ties.clear();
        for (std::size_t k = 0; k < K; ++k) {
            const double metric = rates[k][m] / std::max(states[k].T, kMinThroughputBps);
            if (metric > best) {
                best = metric;
                ties.assign(1, k);
            } else if (metric == best) {
                ties.push_back(k);
            }
        }
        if (ties.empty()) {
            ++r.idle;
            continue;
        }
        std::size_t k = ties[0];
        if (ties.size() > 1)
            k = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];
        r.winner[m] = static_cast<int>(k);
        r.rate[m] = rates[k][m];
        r.served_bits[k] += rates[k][m] * tti_s;
    }
    return r;
}

/// T_k <- (1 - 1/N_T) T_k + (1/N_T) * served rate this TTI.
inline void update_throughput(std::vector<UeState>& states, const TtiResult& r, double n_t, double tti_s)
{
    if (!(n_t >= 1.0))
        throw ConfigError("N_T must be >= 1");
    if (r.served_bits.size() != states.size())
        throw ContractViolation("result does not match the UE set");
    const double a = 1.0 / n_t;
    for (std::size_t k = 0; k < states.size(); ++k)
        states[k].T = (1.0 - a) * states[k].T + a * r.served_bits[k] / tti_s;
}

} // namespace dsr
