#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dsr/cli/config.hpp"
#include "dsr/cli/experiment.hpp"

namespace {

struct Overrides {
    std::string config;
    std::vector<std::string> scenarios;
    std::optional<int> drops, ttis;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
};

void add_common(CLI::App* app, Overrides& o)
{
    app->add_option("--config", o.config, "flat key = value configuration file");
    app->add_option("--drops", o.drops, "number of UE drops");
    app->add_option("--ttis", o.ttis, "TTIs per drop");
    app->add_option("--seed", o.seed, "base random seed");
    app->add_option("--out", o.out, "output directory");
}

dsr::ExperimentConfig resolve(const Overrides& o)
{
    auto c = o.config.empty() ? dsr::ExperimentConfig{} : dsr::load_config(o.config);
    if (!o.scenarios.empty()) {
        c.scenarios.clear();
        for (const auto& s : o.scenarios)
            c.scenarios.push_back(dsr::parse_scenario(s));
    }
    if (o.drops)
        c.drops = *o.drops;
    if (o.ttis) {
        c.ttis = *o.ttis;
        if (c.warmup_ttis >= c.ttis)
            c.warmup_ttis = c.ttis / 10;
    }
    if (o.seed)
        c.seed = *o.seed;
    if (o.out)
        c.output_dir = *o.out;
    dsr::validate(c);
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"GSM-over-LTE overlay: link-level power allocation and system-level scheduling"};
    app.require_subcommand(1);
    Overrides o;
    bool emit_psd = false;

    auto* sim = app.add_subcommand("simulate", "run the multi-cell scheduler scenarios");
    add_common(sim, o);
    sim->add_option("--scenario", o.scenarios, "BASELINE, PF_NO_GSM, PF or PF_FFR (repeatable)");
    sim->add_flag("--emit-psd", emit_psd, "also write the optimised LTE PSD and the GSM virtual PSD");

    auto* power = app.add_subcommand("power", "solve the single-link allocation and sweep SNR");
    add_common(power, o);

    auto* plan = app.add_subcommand("validate-plan", "check the puncture and reuse plans");
    add_common(plan, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        const auto c = resolve(o);
        if (sim->parsed())
            dsr::run_experiment(c, emit_psd, std::cout);
        else if (power->parsed())
            dsr::run_power(c, c.output_dir, true, std::cout);
        else if (!dsr::run_validate_plan(c, std::cout))
            return 1;
        return 0;
    } catch (const dsr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
