#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "semiisac/sweep.hpp"
#include "semiisac/validate.hpp"

namespace {

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-ISaC uplink performance toolkit: closed-form metrics, asymptotics "
                 "and a Monte Carlo cross-validator over Nakagami-m fading"};
    app.require_subcommand(1);

    std::string config_arg = "paper-sec6";
    std::string spec_path;
    std::string out_path;
    std::string profile = "default";
    std::string scenario_list = "noma-semi-1";
    std::string metric_list = "op,rate";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate metrics for one config, CSV on standard output");
    eval->add_option("--config", config_arg, "config file path or preset name");
    eval->add_option("--scenario", scenario_list, "comma-separated scenario names");
    eval->add_option("--metrics", metric_list,
                     "comma-separated metrics (op, rate, op_asymptotic, diversity, reir, "
                     "reir_rayleigh, reir_asymptotic, capacity, slope, ber)");
    eval->add_option("--samples", samples, "enable Monte Carlo rows with this sample count");
    eval->add_option("--seed", seed, "Monte Carlo seed");

    CLI::App* sweep = app.add_subcommand("sweep", "run a declarative sweep to a CSV file");
    sweep->add_option("--spec", spec_path, "sweep spec JSON")->required();
    sweep->add_option("--out", out_path, "output CSV path")->required();
    sweep->add_option("--seed", seed, "override the spec's Monte Carlo seed");
    sweep->add_option("--samples", samples, "override the spec's Monte Carlo sample count");

    CLI::App* validate =
        app.add_subcommand("validate", "run the invariant and analytic-vs-MC suite");
    validate->add_option("--config", config_arg, "config file path or preset name");
    validate->add_option("--profile", profile, "tolerance profile: default or quick");
    validate->add_option("--seed", seed, "Monte Carlo seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) {
            const semiisac::SystemConfig cfg = semiisac::load_config(config_arg);
            std::optional<semiisac::McSettings> mc;
            if (samples) {
                semiisac::McSettings s;
                s.n_samples = *samples;
                if (seed) s.seed = *seed;
                mc = s;
            }
            std::cout << semiisac::csv_header();
            for (const std::string& sc_name : split_csv_list(scenario_list)) {
                const semiisac::Scenario sc = semiisac::scenario_from_string(sc_name);
                for (const std::string& metric : split_csv_list(metric_list)) {
                    for (semiisac::CsvRow row :
                         semiisac::eval_metric_rows(cfg, sc, metric, mc)) {
                        row.axis = "-";
                        std::cout << semiisac::format_csv_row(row);
                    }
                }
            }
            return 0;
        }
        if (sweep->parsed()) {
            semiisac::SweepSpec spec = semiisac::load_sweep_spec(spec_path);
            if (samples || seed) {
                semiisac::McSettings s = spec.mc.value_or(semiisac::McSettings{});
                if (samples) s.n_samples = *samples;
                if (seed) s.seed = *seed;
                spec.mc = s;
            }
            semiisac::run_sweep_to_file(spec, out_path);
            return 0;
        }
        if (validate->parsed()) {
            const semiisac::SystemConfig cfg = semiisac::load_config(config_arg);
            semiisac::ValidationOptions opt = semiisac::options_for_profile(profile);
            if (seed) opt.seed = *seed;
            const std::vector<semiisac::CheckResult> checks =
                semiisac::run_validation(cfg, opt);
            semiisac::print_report(std::cout, checks);
            return semiisac::all_pass(checks) ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
