// Acceptance run: one PASS/FAIL line per criterion, artifacts under --artifacts.
// Exit status is 0 once every criterion has been evaluated; --strict makes it
// reflect the verdicts instead.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dsr/cli/experiment.hpp"
#include "dsr/power.hpp"
#include "dsr/sim.hpp"
#include "dsr/spectral.hpp"

using namespace dsr;
namespace fs = std::filesystem;

namespace {

// pinned tolerances
constexpr double kCapTargetDb = 11.0;
constexpr double kCapTolDb = 1.5;
constexpr double kCapTimeS = 1.0;
constexpr double kWhiteRelTol = 1e-6;
constexpr int kWhiteProbes = 100;
constexpr double kWhiteTimeS = 1.0;
constexpr double kEnergyRelTol = 1e-3;
constexpr int kEnergyCases = 10;
constexpr double kEnergyTimeS = 10.0;
constexpr int kOracleCases = 200;
constexpr double kOracleRelTol = 1e-5;
constexpr double kOracleTimeS = 60.0;
constexpr double kGuardShare = 0.01;
constexpr double kMaskLevelDb = -15.0;
constexpr double kGuardTimeS = 30.0;
constexpr double kSweepTimeS = 60.0;
constexpr double kPfNoGsmRelTol = 0.05;
constexpr double kPfRatioLo = 0.58, kPfRatioHi = 0.74;
constexpr double kFfrRatioLo = 0.73, kFfrRatioHi = 0.89;
constexpr double kDeskTimeS = 300.0;
constexpr double kUniformSe = 2.0;
constexpr double kRankCorrMin = 0.3;
constexpr double kWaterfillTimeS = 10.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = true;
    std::string detail;
};

class Report {
public:
    explicit Report(fs::path dir) : dir_(std::move(dir)) {}

    void add(int id, const std::string& name, const Verdict& v, double secs)
    {
        char buf[96];
        std::snprintf(buf, sizeof buf, "[%s] C%-2d %-28s (%.2fs) ", v.pass ? "PASS" : "FAIL", id, name.c_str(), secs);
        const std::string line = buf + v.detail;
        std::cout << line << std::endl;
        lines_.push_back(line);
        passed_ += v.pass;
        ++total_;
    }

    int passed() const { return passed_; }
    int total() const { return total_; }

    void write() const
    {
        std::ofstream out(dir_ / "acceptance_report.txt");
        for (const auto& l : lines_)
            out << l << '\n';
        out << "passed " << passed_ << " of " << total_ << '\n';
    }

private:
    fs::path dir_;
    std::vector<std::string> lines_;
    int passed_ = 0, total_ = 0;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

void check(Verdict& v, bool ok, const std::string& what)
{
    if (!ok) {
        v.pass = false;
        v.detail += (v.detail.empty() ? "" : "; ") + what;
    }
}

void check_time(Verdict& v, double secs, double limit)
{
    check(v, secs < limit, fmt("runtime %.2fs over %.0fs", secs, limit));
}

// 1: adjacent-PRB cap
Verdict leakage_cap()
{
    const OfdmConfig cfg;
    const PrbGrid prbs(cfg);
    const auto plan = PuncturePlan::from_gsm_channels(cfg, default_gsm_channels());
    double worst = INFINITY;
    std::size_t at = 0;
    for (std::size_t m : {1u, 6u, 11u, 16u, 33u, 38u, 43u, 48u}) {
        const double cap = leakage_limited_sinr(m, plan, prbs, 13.56);
        if (cap < worst) {
            worst = cap;
            at = m;
        }
    }
    Verdict v;
    v.detail = fmt("min adjacent cap %.3f dB at PRB %.0f, target %.1f +- %.1f dB", worst, static_cast<double>(at),
                   kCapTargetDb, kCapTolDb);
    check(v, std::abs(worst - kCapTargetDb) <= kCapTolDb, "cap outside window");
    return v;
}

// 2: white noise stays white
Verdict white_noise()
{
    const double Ts = OfdmConfig{}.symbol_time_s;
    const FrequencyGrid g(-5e6, 5e6, 1e3);
    const double level = 1e-20;
    const SpectralDensity s(g, std::vector<double>(g.size(), level));
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-5e6, 5e6);
    double worst = 0;
    for (int i = 0; i < kWhiteProbes; ++i)
        worst = std::max(worst, std::abs(virtual_psd(s, Ts, u(rng), Extension::Flat) / level - 1.0));
    Verdict v;
    v.detail = fmt("max relative error %.2e over %.0f probes (tol %.0e)", worst, kWhiteProbes, kWhiteRelTol);
    check(v, worst <= kWhiteRelTol, "identity violated");
    return v;
}

// 3: energy conservation on random bounded-support PSDs
Verdict energy(const fs::path& dir)
{
    const double Ts = OfdmConfig{}.symbol_time_s;
    const FrequencyGrid in(-1e6, 1e6, 1e3);
    const FrequencyGrid out(-20e6, 20e6, 1e3);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::ofstream csv(dir / "c3_energy.csv");
    csv << "case,real_w,virtual_w,rel_err\n";
    double worst = 0;
    for (int c = 0; c < kEnergyCases; ++c) {
        // random piecewise-linear shape on 50 kHz knots inside a random sub-band
        const double lo = -1e6 + 0.8e6 * u(rng), hi = 1e6 - 0.8e6 * u(rng);
        std::vector<double> knots(41);
        for (auto& k : knots)
            k = u(rng) * std::pow(10.0, 3 * u(rng));
        std::vector<double> vals(in.size());
        for (std::size_t j = 0; j < in.size(); ++j) {
            const double f = in.frequency(j);
            if (f <= lo || f >= hi)
                continue;
            const double x = (f + 1e6) / 50e3;
            const auto k = std::min<std::size_t>(static_cast<std::size_t>(x), 39);
            vals[j] = knots[k] + (x - k) * (knots[k + 1] - knots[k]);
        }
        const SpectralDensity s(in, std::move(vals));
        const auto v = virtual_psd_on(s, Ts, out, Extension::Zero);
        const double err = std::abs(v.total_power() / s.total_power() - 1.0);
        worst = std::max(worst, err);
        csv << c << ',' << s.total_power() << ',' << v.total_power() << ',' << err << '\n';
    }
    Verdict v;
    v.detail = fmt("max relative energy error %.2e over %.0f PSDs (tol %.0e)", worst, kEnergyCases, kEnergyRelTol);
    check(v, worst <= kEnergyRelTol, "energy not conserved");
    return v;
}

AllocationProblem random_problem(std::mt19937_64& rng, std::size_t n, std::size_t m)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    AllocationProblem p;
    p.p_max = 0.5 + 10.0 * u(rng);
    for (std::size_t i = 0; i < n; ++i)
        p.noise.push_back(0.05 + 2.0 * u(rng));
    for (std::size_t j = 0; j < m; ++j) {
        MaskConstraint c;
        for (std::size_t i = 0; i < n; ++i)
            c.weights.push_back(u(rng) < 0.2 ? 0.0 : u(rng));
        c.weights[j % n] += 0.1;
        c.threshold = 0.2 + p.p_max * 0.5 * u(rng);
        p.constraints.push_back(c);
    }
    return p;
}

void dump_problem(std::ostream& os, int id, const AllocationProblem& p, const PowerAllocation& a,
                  const PowerAllocation& o)
{
    os << "# case " << id << " appendix " << a.objective << " oracle " << o.objective << '\n';
    os << "p_max," << p.p_max << "\nnoise";
    for (double x : p.noise)
        os << ',' << x;
    os << '\n';
    for (const auto& c : p.constraints) {
        os << "row," << c.threshold;
        for (double w : c.weights)
            os << ',' << w;
        os << '\n';
    }
}

// 4: appendix against the reference solver
Verdict oracle_equivalence(const fs::path& dir)
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> nn(1, 32), mm(0, 4);
    std::ofstream ce(dir / "c4_counterexamples.txt");
    int feasible = 0, mismatches = 0, infeasible = 0;
    double worst = 0;
    for (int t = 0; t < kOracleCases; ++t) {
        const auto p = random_problem(rng, nn(rng), mm(rng));
        const auto a = solve_appendix(p);
        const auto o = solve_oracle(p);
        if (!a.feasible) {
            ++infeasible;
            continue;
        }
        ++feasible;
        const double rel = std::abs(a.objective - o.objective) / std::max(1e-300, std::abs(o.objective));
        worst = std::max(worst, rel);
        if (rel > kOracleRelTol) {
            ++mismatches;
            dump_problem(ce, t, p, a, o);
        }
    }
    Verdict v;
    v.detail = fmt("%.0f feasible appendix picks, %.0f mismatches, max rel diff %.2e; %.0f picks infeasible",
                   feasible, mismatches, worst, infeasible);
    check(v, mismatches == 0, "counterexamples written");
    return v;
}

// 5: guard band emergence and mask on the four-portion configuration
Verdict guard_band(const fs::path& dir)
{
    const OfdmConfig cfg;
    const auto plan = PuncturePlan::from_gsm_channels(cfg, default_gsm_channels());
    const auto prob = build_problem(plan, ProblemSpec{});
    const auto a = solve_with_fallback(prob);
    {
        std::ofstream out(dir / "c5_allocation.csv");
        write_allocation_csv(out, plan.lte_set(), prob.noise, a);
    }
    const double mean = std::accumulate(a.powers.begin(), a.powers.end(), 0.0) / a.powers.size();
    const auto& phi = plan.lte_set();
    double worst_guard = 0;
    int flank = 0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        bool near = false;
        for (int d = 1; d <= 2; ++d)
            near = near || plan.is_punctured(phi[i] + d) || plan.is_punctured(phi[i] - d);
        if (near) {
            ++flank;
            worst_guard = std::max(worst_guard, a.powers[i] / mean);
        }
    }
    const double mean_psd = mean / cfg.subcarrier_bandwidth_hz;
    double worst_mask = -INFINITY;
    for (const auto& g : plan.gsm_channels())
        worst_mask = std::max(worst_mask, linear_to_db(lte_psd_at(g.center_hz, a.powers, cfg, plan) / mean_psd));
    Verdict v;
    v.detail = fmt("%.0f flank subcarriers, max %.2e of mean power (tol %.2f); worst PSD at GSM centre %.2f dB",
                   flank, worst_guard, kGuardShare, worst_mask);
    check(v, flank == 16, "expected 16 flank subcarriers");
    check(v, worst_guard < kGuardShare, "guard subcarriers carry power");
    check(v, worst_mask <= kMaskLevelDb + 1e-9, "mask exceeded");
    return v;
}

// 6: rate-versus-SNR curve shape
Verdict rate_shape(const fs::path& dir)
{
    const OfdmConfig cfg;
    const auto plan = PuncturePlan::from_gsm_channels(cfg, default_gsm_channels());
    const auto pts = rate_vs_snr(plan, ProblemSpec{}, {0.0, 10.0, 25.0});
    {
        std::ofstream out(dir / "c6_rate_sweep.csv");
        write_rate_sweep_csv(out, pts);
    }
    Verdict v;
    std::string d;
    std::vector<double> gap;
    for (const auto& p : pts) {
        const double leak = p.noise_only - p.with_leakage, ics = p.noise_only - p.with_ics;
        gap.push_back(leak - ics);
        d += fmt("%.0f dB: leak loss %.1f, ICS loss %.1f nats; ", p.snr_db, leak, ics);
        check(v, p.with_both <= std::min(p.with_leakage, p.with_ics) * (1 + 1e-9), "combined above a single curve");
    }
    check(v, gap[0] > 0 && gap[1] > 0, "leakage loss does not dominate at 0/10 dB");
    check(v, gap[2] < 0, "ICS loss does not dominate at 25 dB");
    check(v, std::signbit(gap[0]) != std::signbit(gap[2]), "single-impairment curves do not cross");
    v.detail = d + (v.detail.empty() ? "" : "| " + v.detail);
    return v;
}

ExperimentConfig desk_config(const fs::path& out, int threads)
{
    ExperimentConfig c;
    c.grid_rows = 4;
    c.grid_cols = 4;
    c.ues_per_sector = 12;
    c.drops = 2;
    c.ttis = 1000;
    c.warmup_ttis = 200;
    c.threads = threads;
    c.output_dir = out.string();
    return c;
}

const RateStats& stats_of(const std::vector<ScenarioResult>& rs, Scenario s)
{
    for (const auto& r : rs)
        if (r.scenario == s)
            return r.stats;
    throw std::runtime_error("scenario missing");
}

// 7: scaled Table III properties
Verdict table_three(const std::vector<ScenarioResult>& rs)
{
    const auto& base = stats_of(rs, Scenario::Baseline);
    const auto& nogsm = stats_of(rs, Scenario::PfNoGsm);
    const auto& pf = stats_of(rs, Scenario::Pf);
    const auto& ffr = stats_of(rs, Scenario::PfFfr);
    const double r_pf = pf.mean / base.mean, r_ffr = ffr.mean / base.mean;
    Verdict v;
    check(v, base.mean > ffr.mean && ffr.mean > pf.mean, "ordering BASELINE > PF_FFR > PF broken");
    check(v, std::abs(pf.mean / nogsm.mean - 1.0) <= kPfNoGsmRelTol, "PF not within 5% of PF_NO_GSM");
    check(v, r_pf >= kPfRatioLo && r_pf <= kPfRatioHi, "PF/BASELINE outside [58%, 74%]");
    check(v, r_ffr >= kFfrRatioLo && r_ffr <= kFfrRatioHi, "PF_FFR/BASELINE outside [73%, 89%]");
    check(v, ffr.bottom5 <= pf.bottom5, "PF_FFR bottom-5% above PF bottom-5%");
    const std::string d = fmt("means (Mbit/s) base %.4f nogsm %.4f pf %.4f ffr %.4f; ", base.mean / 1e6,
                              nogsm.mean / 1e6, pf.mean / 1e6, ffr.mean / 1e6) +
                          fmt("PF %.1f%% FFR %.1f%% of base; bottom5 pf %.4f ffr %.4f", 100 * r_pf, 100 * r_ffr,
                              pf.bottom5 / 1e6, ffr.bottom5 / 1e6);
    v.detail = d + (v.detail.empty() ? "" : " | " + v.detail);
    return v;
}

// 8: allocation statistics on the PF_FFR run
Verdict fig_ten(const std::vector<ScenarioResult>& rs)
{
    const auto& ffr = stats_of(rs, Scenario::PfFfr);
    const auto u = allocation_uniformity(ffr, PrbClass::Normal);
    const double rho = allocation_rank_correlation(ffr, PrbClass::Ffr);
    Verdict v;
    check(v, u.worst_ratio <= kUniformSe, "NORMAL allocation deviates beyond 2 SE");
    check(v, rho > kRankCorrMin, "FFR rank correlation not above 0.3");
    const std::string d = fmt("NORMAL worst |p-1/K| %.4f = %.2f SE (bound %.1f SE) at rank %.0f; ", u.max_deviation,
                              u.worst_ratio, kUniformSe, static_cast<double>(u.worst_rank)) +
                          fmt("FFR Spearman %.3f (min %.1f)", rho, kRankCorrMin);
    v.detail = d + (v.detail.empty() ? "" : " | " + v.detail);
    return v;
}

double oracle_level(const std::vector<double>& f, double c)
{
    auto g = [&](double L) {
        double s = 0;
        for (double x : f)
            s += std::max(0.0, L - x);
        return s;
    };
    double lo = 0, hi = 1;
    while (g(hi) < c)
        hi *= 2;
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < c ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// 9: waterfilling examples and KKT
Verdict waterfilling()
{
    Verdict v;
    auto near = [](double a, double b, double tol) { return std::abs(a - b) <= tol; };
    auto a = waterfill_budget({1, 1}, 2);
    check(v, near(a.powers[0], 1, 1e-12) && near(a.powers[1], 1, 1e-12), "budget [1,1]");
    a = waterfill_budget({1, 3}, 2);
    check(v, near(a.powers[0], 2, 1e-12) && a.powers[1] == 0.0, "budget [1,3]");
    a = waterfill_budget({1}, 5);
    check(v, near(a.powers[0], 5, 1e-12), "budget [1]");

    const std::vector<double> flat{0.3, 0.3, 0.3, 0.3};
    const auto c1 = waterfill_constraint(flat, {1, 1, 1, 1}, 2.0);
    const auto b1 = waterfill_budget(flat, 2.0);
    for (std::size_t i = 0; i < 4; ++i)
        check(v, near(c1.powers[i], b1.powers[i], 1e-12), "unit weights differ from budget");
    const auto z = waterfill_constraint({1, 1}, {1, 0}, 3.0);
    check(v, near(z.powers[0], 3, 1e-12) && z.unconstrained == std::vector<std::size_t>{1}, "zero weight");
    const auto w = waterfill_constraint({1, 1}, {2, 1}, 3.0);
    const double L = oracle_level({2.0, 1.0}, 3.0);
    check(v, near(w.powers[0], L / 2 - 1, 1e-10) && near(w.powers[1], L - 1, 1e-10), "weighted [2,1]");

    AllocationProblem p;
    p.noise = {0.5, 1.0, 2.0};
    p.p_max = 2.0;
    check(v, solve_appendix(p).powers == waterfill_budget(p.noise, p.p_max).powers, "appendix M=0");
    check(v, near(solve_oracle(p).objective, waterfill_budget(p.noise, p.p_max).objective, 1e-6), "oracle M=0");
    AllocationProblem toy;
    toy.noise = {0.2, 0.4, 0.8, 1.6};
    toy.p_max = 4.0;
    toy.constraints.push_back({{1.0, 0.5, 0.1, 0.05}, 3.0, 0.0});
    const auto ta = solve_appendix(toy), to = solve_oracle(toy);
    check(v, ta.feasible && near(ta.objective, to.objective, 1e-6 * to.objective), "toy appendix vs oracle");
    AllocationProblem one;
    one.noise = {0.5, 0.5, 1.0};
    one.constraints.push_back({{1.0, 2.0, 1.0}, 1.0, 0.0});
    const auto cw = waterfill_constraint(one.noise, one.constraints[0].weights, 1.0);
    one.p_max = 2.0 * std::accumulate(cw.powers.begin(), cw.powers.end(), 0.0);
    check(v, near(solve_oracle(one).objective, cw.objective, 1e-6 * cw.objective), "slack budget vs constraint");
    AllocationProblem clash;
    clash.noise = {0.3, 0.3, 0.3};
    clash.p_max = 10.0;
    clash.constraints.push_back({{1.0, 0.2, 0.0}, 0.5, 0.0});
    clash.constraints.push_back({{0.0, 0.2, 1.0}, 0.4, 0.0});
    const auto co = solve_oracle(clash);
    check(v, !solve_appendix(clash).feasible && co.feasible && violated_constraints(clash, co.powers).empty(),
          "conflicting masks");
    check(v, spectral_efficiency({0, 0}, {1, 2}) == 0.0, "zero power rate");
    check(v, near(spectral_efficiency({1, 2, 3}, {1, 2, 3}), 3 * std::log(2.0), 1e-14), "p = N rate");

    const OfdmConfig cfg;
    const auto plan = PuncturePlan::from_gsm_channels(cfg, default_gsm_channels());
    ProblemSpec s;
    s.impairment = Impairment::None;
    s.constraint_set = ConstraintSet::GroupEdges;
    check(v, build_problem(plan, s).constraints.size() == 8, "grouped plan rows");
    check(v, build_problem(PuncturePlan::from_subcarriers(cfg, {}), s).constraints.empty(), "no-GSM rows");
    s.constraint_set = ConstraintSet::ChannelCenters;
    for (const auto& row : build_problem(plan, s).constraints) {
        std::vector<std::pair<double, double>> lobe;
        for (std::size_t i = 0; i < plan.lte_set().size(); ++i) {
            const double d = std::abs(row.freq_hz - plan.lte_set()[i] * cfg.subcarrier_spacing_hz);
            if (d < 1.0 / cfg.symbol_time_s)
                lobe.emplace_back(d, row.weights[i]);
        }
        std::sort(lobe.begin(), lobe.end());
        for (std::size_t t = 1; t < lobe.size(); ++t)
            if (lobe[t].second > lobe[t - 1].second)
                check(v, false, "weights not decreasing on the main lobe");
    }

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int kkt_fail = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(u(rng) * 64);
        std::vector<double> noise(n);
        for (auto& x : noise)
            x = std::exp(4.0 * (u(rng) - 0.5));
        const double pmax = std::exp(6.0 * (u(rng) - 0.5));
        const auto r = waterfill_budget(noise, pmax);
        const double level = oracle_level(noise, pmax);
        bool ok = near(std::accumulate(r.powers.begin(), r.powers.end(), 0.0), pmax, 1e-10 * pmax);
        for (std::size_t i = 0; i < n; ++i)
            ok = ok && (r.powers[i] > 0 ? near(r.powers[i] + noise[i], level, 1e-8 * level)
                                        : noise[i] >= level * (1 - 1e-8));
        kkt_fail += !ok;
    }
    check(v, kkt_fail == 0, fmt("%.0f KKT failures", kkt_fail));
    v.detail = fmt("examples checked; KKT water level held on %.0f of 1000 budget problems", 1000 - kkt_fail) +
               (v.detail.empty() ? "" : " | " + v.detail);
    return v;
}

// 10: byte-identical CSVs between a serial and a parallel run
Verdict determinism(const fs::path& a, const fs::path& b)
{
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    int files = 0, differ = 0;
    std::string first;
    for (const auto& e : fs::recursive_directory_iterator(a)) {
        if (!e.is_regular_file() || e.path().extension() != ".csv")
            continue;
        const auto rel = fs::relative(e.path(), a);
        ++files;
        if (!fs::exists(b / rel) || slurp(e.path()) != slurp(b / rel)) {
            ++differ;
            if (first.empty())
                first = rel.string();
        }
    }
    Verdict v;
    v.detail = fmt("%.0f CSVs compared, %.0f differ", files, differ) + (first.empty() ? "" : " (first: " + first + ")");
    check(v, files > 0 && differ == 0, "outputs differ");
    return v;
}

} // namespace

int main(int argc, char** argv)
{
    fs::path dir = "acceptance_artifacts";
    bool strict = false;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--artifacts" && i + 1 < argc)
            dir = argv[++i];
        else if (a == "--strict")
            strict = true;
        else {
            std::cerr << "usage: acceptance [--artifacts DIR] [--strict]\n";
            return 2;
        }
    }
    fs::create_directories(dir);
    Report rep(dir);

    auto timed = [&](int id, const std::string& name, double limit, const std::function<Verdict()>& fn) {
        const auto t0 = Clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double s = seconds_since(t0);
        if (limit > 0)
            check_time(v, s, limit);
        rep.add(id, name, v, s);
        return s;
    };

    timed(1, "leakage-limited SINR cap", kCapTimeS, leakage_cap);
    timed(2, "virtual PSD white noise", kWhiteTimeS, white_noise);
    timed(3, "virtual PSD energy", kEnergyTimeS, [&] { return energy(dir); });
    timed(4, "appendix vs oracle", kOracleTimeS, [&] { return oracle_equivalence(dir); });
    timed(5, "guard band and mask", kGuardTimeS, [&] { return guard_band(dir); });
    timed(6, "rate vs SNR shape", kSweepTimeS, [&] { return rate_shape(dir); });

    std::vector<ScenarioResult> run_a;
    std::ostringstream log;
    timed(7, "desk-scale scenario table", kDeskTimeS, [&] {
        fs::remove_all(dir / "c7_run_a");
        run_a = run_experiment(desk_config(dir / "c7_run_a", 1), false, log);
        return table_three(run_a);
    });
    timed(8, "PRB allocation statistics", 0, [&] { return fig_ten(run_a); });
    timed(9, "waterfilling suite", kWaterfillTimeS, waterfilling);
    timed(10, "determinism", 0, [&] {
        fs::remove_all(dir / "c7_run_b");
        run_experiment(desk_config(dir / "c7_run_b", 4), false, log);
        return determinism(dir / "c7_run_a", dir / "c7_run_b");
    });

    rep.write();
    std::cout << "acceptance: " << rep.passed() << " of " << rep.total() << " criteria pass; report in "
              << (dir / "acceptance_report.txt").string() << std::endl;
    return strict && rep.passed() != rep.total() ? 1 : 0;
}
