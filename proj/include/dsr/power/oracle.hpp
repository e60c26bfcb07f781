#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "dsr/common/errors.hpp"
#include "dsr/power/problem.hpp"

namespace dsr {

struct OracleOptions {
    double rel_gap = 1e-9;           ///< stop when the duality gap is below this fraction of the objective
    std::size_t max_iterations = 200000;
    std::size_t gap_check_every = 10;
    double projection_tol = 1e-13;
};

namespace detail {

/**
 * Euclidean projection onto {x >= 0, B x <= c} by cyclic dual coordinate
 * ascent (Hildreth). mu is warm-started and updated in place; each
 * coordinate step solves its piecewise-linear equation exactly.
 */
class PolyhedronProjector {
public:
    PolyhedronProjector(std::vector<std::vector<double>> rows, std::vector<double> limits, double tol)
        : B_(std::move(rows)), c_(std::move(limits)), tol_(tol), mu_(B_.size(), 0.0)
    {
    }

    const std::vector<double>& multipliers() const { return mu_; }

    std::vector<double> project(const std::vector<double>& z, std::size_t max_sweeps = 100000)
    {
        const std::size_t n = z.size();
        const std::size_t m = B_.size();
        // r = B^T mu
        std::vector<double> r(n, 0.0);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < n; ++i)
                r[i] += B_[j][i] * mu_[j];
        std::vector<double> zt(n);
        std::vector<std::pair<double, std::size_t>> brk;
        for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
            double worst = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const auto& b = B_[j];
                for (std::size_t i = 0; i < n; ++i)
                    zt[i] = z[i] - (r[i] - b[i] * mu_[j]);
                const double mj = solve_row(b, zt, c_[j], brk);
                const double d = mj - mu_[j];
                if (d != 0.0) {
                    for (std::size_t i = 0; i < n; ++i)
                        r[i] += b[i] * d;
                    worst = std::max(worst, std::abs(d) * row_scale(j));
                }
                mu_[j] = mj;
            }
            if (worst <= tol_)
                break;
        }
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = std::max(0.0, z[i] - r[i]);
        return x;
    }

private:
    double row_scale(std::size_t j)
    {
        if (scale_.empty()) {
            scale_.resize(B_.size());
            for (std::size_t k = 0; k < B_.size(); ++k) {
                double s = 0.0;
                for (double v : B_[k])
                    s += v * v;
                scale_[k] = s / c_[k];
            }
        }
        return scale_[j];
    }

    // mu >= 0 with sum_i b_i (zt_i - b_i mu)^+ = c, or 0 if already satisfied
    static double solve_row(const std::vector<double>& b, const std::vector<double>& zt, double c,
                            std::vector<std::pair<double, std::size_t>>& brk)
    {
        double g0 = 0.0;
        brk.clear();
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] > 0.0 && zt[i] > 0.0) {
                g0 += b[i] * zt[i];
                brk.emplace_back(zt[i] / b[i], i);
            }
        }
        if (g0 <= c)
            return 0.0;
        std::sort(brk.begin(), brk.end(), [](const auto& a, const auto& q) { return a.first > q.first; });
        double s1 = 0.0, s2 = 0.0;
        for (std::size_t k = 0; k < brk.size(); ++k) {
            const std::size_t i = brk[k].second;
            s1 += b[i] * zt[i];
            s2 += b[i] * b[i];
            const double next = k + 1 < brk.size() ? brk[k + 1].first : 0.0;
            const double mu = (s1 - c) / s2;
            if (mu >= next)
                return std::max(mu, 0.0);
        }
        return std::max((s1 - c) / s2, 0.0);
    }

    std::vector<std::vector<double>> B_;
    std::vector<double> c_;
    double tol_;
    std::vector<double> mu_;
    std::vector<double> scale_;
};

inline double log_rate(const std::vector<double>& x)
{
    double f = 0.0;
    for (double v : x)
        f += std::log1p(v);
    return f;
}

} // namespace detail

/**
 * Reference solver: accelerated projected gradient ascent (FISTA with
 * function-value restart) in the scaled variables x_i = p_i/N_i, where
 * the objective has unit-Lipschitz gradient. Terminates on a certified
 * duality gap built from the projection multipliers.
 */
inline PowerAllocation solve_oracle(const AllocationProblem& prob, const OracleOptions& opt = {})
{
    prob.validate();
    const std::size_t n = prob.size();
    const std::size_t m = prob.constraints.size() + 1;

    std::vector<std::vector<double>> rows(m, std::vector<double>(n));
    std::vector<double> lim(m);
    for (std::size_t i = 0; i < n; ++i)
        rows[0][i] = prob.noise[i];
    lim[0] = prob.p_max;
    for (std::size_t j = 1; j < m; ++j) {
        const auto& c = prob.constraints[j - 1];
        for (std::size_t i = 0; i < n; ++i)
            rows[j][i] = c.weights[i] * prob.noise[i];
        lim[j] = c.threshold;
    }
    const auto B = rows;
    detail::PolyhedronProjector proj(std::move(rows), lim, opt.projection_tol);

    auto ascent = [](const std::vector<double>& y) {
        std::vector<double> z(y.size());
        for (std::size_t i = 0; i < y.size(); ++i)
            z[i] = y[i] + 1.0 / (1.0 + std::max(y[i], 0.0));
        return z;
    };
    // scale x down onto the feasible set
    auto make_feasible = [&](std::vector<double> x) {
        double shrink = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                s += B[j][i] * x[i];
            if (s > lim[j])
                shrink = std::min(shrink, lim[j] / s);
        }
        for (double& v : x)
            v = std::max(0.0, v * shrink);
        return x;
    };
    auto dual_bound = [&](const std::vector<double>& lambda) {
        double d = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            d += lambda[j] * lim[j];
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j)
                s += lambda[j] * B[j][i];
            if (s < 1.0)
                d += -std::log(s) - 1.0 + s;
        }
        return d;
    };

    std::vector<double> x = proj.project(std::vector<double>(n, 0.0));
    std::vector<double> x_prev = x;
    std::vector<double> y = x;
    double f_prev = detail::log_rate(x);
    double theta = 1.0;
    double best_gap = std::numeric_limits<double>::infinity();
    double primal = f_prev;
    std::vector<double> best = make_feasible(x);

    for (std::size_t it = 1; it <= opt.max_iterations; ++it) {
        x = proj.project(ascent(y));
        const double f = detail::log_rate(x);
        if (f < f_prev) {
            // restart momentum
            theta = 1.0;
            y = x;
        } else {
            const double theta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
            const double beta = (theta - 1.0) / theta_next;
            for (std::size_t i = 0; i < n; ++i)
                y[i] = std::max(0.0, x[i] + beta * (x[i] - x_prev[i]));
            theta = theta_next;
        }
        x_prev = x;
        f_prev = f;

        if (it % opt.gap_check_every == 0) {
            // a plain gradient step from x exposes KKT multipliers at x
            auto probe = proj;
            const auto xs = probe.project(ascent(x));
            const auto feas = make_feasible(xs);
            const double fp = detail::log_rate(feas);
            const double db = dual_bound(probe.multipliers());
            if (fp > primal) {
                primal = fp;
                best = feas;
            }
            best_gap = std::min(best_gap, db - primal);
            if (best_gap <= opt.rel_gap * std::max(std::abs(primal), 1e-300)) {
                PowerAllocation a;
                a.powers.resize(n);
                for (std::size_t i = 0; i < n; ++i)
                    a.powers[i] = best[i] * prob.noise[i];
                a.objective = spectral_efficiency(a.powers, prob.noise);
                a.violated = violated_constraints(prob, a.powers);
                a.feasible = a.violated.empty();
                // face: the tightest row at the solution
                double tight = -1.0;
                for (std::size_t j = 0; j < m; ++j) {
                    const double load = constraint_load(prob, a.powers, static_cast<int>(j)) / constraint_limit(prob, static_cast<int>(j));
                    if (load > tight) {
                        tight = load;
                        a.active_face = static_cast<int>(j);
                    }
                }
                a.solver = "oracle";
                a.iterations = it;
                return a;
            }
        }
    }
    std::ostringstream os;
    os << "oracle did not converge in " << opt.max_iterations << " iterations; best primal " << primal
       << ", duality gap " << best_gap;
    throw NumericError(os.str());
}

} // namespace dsr
