#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/overlay/prb_class.hpp"

namespace dsr {

struct UeRecord {
    int drop = 0;
    std::size_t ue_id = 0;
    std::size_t sector = 0;
    double rate_bps = 0.0;
    std::size_t sector_ues = 0;              ///< UEs sharing the serving sector
    std::array<double, 4> alloc_prob{};      ///< per PrbClass: share of that class's PRB-TTIs won
    std::array<std::size_t, 4> class_prbs{}; ///< PRBs of each class in the serving sector
};

struct DropResult {
    int drop = 0;
    int stat_ttis = 0;
    std::size_t idle_prb_ttis = 0;
    std::vector<UeRecord> ues;
};

struct RateStats {
    std::vector<UeRecord> ranked;  ///< ascending rate; index is the rank
    double mean = 0.0;
    double top5 = 0.0;
    double bottom5 = 0.0;
    std::vector<std::pair<double, double>> cdf;
    int stat_ttis = 0;
};

/// Number of samples in a 5% tail: ceil(0.05 n), at least one.
inline std::size_t tail_count(std::size_t n) { return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(0.05 * n - 1e-9))); }

inline RateStats aggregate(const std::vector<DropResult>& drops)
{
    if (drops.empty())
        throw DomainError("no drop results to aggregate");
    RateStats r;
    r.stat_ttis = drops.front().stat_ttis;
    for (const auto& d : drops)
        r.ranked.insert(r.ranked.end(), d.ues.begin(), d.ues.end());
    if (r.ranked.empty())
        throw DomainError("no UE served by the centre cell");
    std::stable_sort(r.ranked.begin(), r.ranked.end(), [](const UeRecord& a, const UeRecord& b) {
        if (a.rate_bps != b.rate_bps)
            return a.rate_bps < b.rate_bps;
        return a.drop != b.drop ? a.drop < b.drop : a.ue_id < b.ue_id;
    });
    const std::size_t n = r.ranked.size();
    double sum = 0.0;
    for (const auto& u : r.ranked)
        sum += u.rate_bps;
    r.mean = sum / n;
    const std::size_t t = tail_count(n);
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
        lo += r.ranked[i].rate_bps;
        hi += r.ranked[n - 1 - i].rate_bps;
    }
    r.bottom5 = lo / t;
    r.top5 = hi / t;
    for (std::size_t i = 0; i < n; ++i)
        r.cdf.emplace_back(r.ranked[i].rate_bps, static_cast<double>(i + 1) / n);
    return r;
}

/// Mid-ranks (1-based), ties averaged.
inline std::vector<double> midranks(const std::vector<double>& v)
{
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]])
            ++j;
        for (std::size_t k = i; k <= j; ++k)
            r[idx[k]] = 0.5 * (i + j) + 1.0;
        i = j + 1;
    }
    return r;
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("rank correlation needs two equal samples of size >= 2");
    const auto rx = midranks(x), ry = midranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

/// Rank correlation between UE rate rank and allocation probability on class c.
inline double allocation_rank_correlation(const RateStats& s, PrbClass c)
{
    std::vector<double> rank, p;
    for (std::size_t i = 0; i < s.ranked.size(); ++i)
        if (s.ranked[i].class_prbs[static_cast<int>(c)] > 0) {
            rank.push_back(static_cast<double>(i));
            p.push_back(s.ranked[i].alloc_prob[static_cast<int>(c)]);
        }
    return spearman(rank, p);
}

struct UniformityCheck {
    double max_deviation = 0.0;  ///< largest |p - 1/K_s|
    double bound = 0.0;          ///< 2 binomial standard errors at that UE
    double worst_ratio = 0.0;    ///< max |p - 1/K_s| / SE
    std::size_t worst_rank = 0;
};

/// Deviation of per-UE allocation probability on class c from the uniform share 1/K_s,
/// in binomial standard errors with one trial per statistics TTI.
inline UniformityCheck allocation_uniformity(const RateStats& s, PrbClass c)
{
    UniformityCheck u;
    const double n = std::max(1, s.stat_ttis);
    for (std::size_t i = 0; i < s.ranked.size(); ++i) {
        const auto& r = s.ranked[i];
        if (r.class_prbs[static_cast<int>(c)] == 0 || r.sector_ues < 2)
            continue;
        const double q = 1.0 / r.sector_ues;
        const double se = std::sqrt(q * (1 - q) / n);
        const double dev = std::abs(r.alloc_prob[static_cast<int>(c)] - q);
        if (dev / se > u.worst_ratio) {
            u.worst_ratio = dev / se;
            u.max_deviation = dev;
            u.bound = 2 * se;
            u.worst_rank = i;
        }
    }
    return u;
}

inline void write_ue_throughput_csv(std::ostream& os, const RateStats& s)
{
    os << "drop,ue_id,rank,rate_bps\n";
    char buf[128];
    for (std::size_t i = 0; i < s.ranked.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%d,%zu,%zu,%.6f\n", s.ranked[i].drop, s.ranked[i].ue_id, i,
                      s.ranked[i].rate_bps);
        os << buf;
    }
}

inline void write_cdf_csv(std::ostream& os, const RateStats& s)
{
    os << "rate_bps,F\n";
    char buf[96];
    for (const auto& [x, f] : s.cdf) {
        std::snprintf(buf, sizeof buf, "%.6f,%.9f\n", x, f);
        os << buf;
    }
}

/// Allocation probability by UE rank for every PRB class the UE's sector transmits.
inline void write_prb_alloc_csv(std::ostream& os, const RateStats& s)
{
    os << "prb_class,ue_rank,alloc_prob\n";
    char buf[96];
    for (auto c : {PrbClass::Normal, PrbClass::Adjacent, PrbClass::Ffr})
        for (std::size_t i = 0; i < s.ranked.size(); ++i) {
            const auto& r = s.ranked[i];
            if (r.class_prbs[static_cast<int>(c)] == 0)
                continue;
            std::snprintf(buf, sizeof buf, "%s,%zu,%.9f\n", to_string(c), i, r.alloc_prob[static_cast<int>(c)]);
            os << buf;
        }
}

} // namespace dsr
