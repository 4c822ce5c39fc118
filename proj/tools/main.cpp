#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcaq/dcaq.hpp"
#include "dcaq/report.hpp"
#include "dcaq/scenario_io.hpp"
#include "dcaq/simulator.hpp"
#include "dcaq/validation.hpp"

// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 oracle failure.

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitOracle = 3;

std::string label_for(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

int cmd_compute(const std::string& path, const std::string& output, bool no_ts_override) {
    const dcaq::Scenario scenario = dcaq::parse_scenario_file(path);
    dcaq::EvaluateOptions options;
    options.honor_ts_override = !no_ts_override;
    const dcaq::DcaqResult result = dcaq::evaluate(scenario, options);
    if (output == "machine") {
        std::cout << dcaq::report::machine_compute(label_for(path), scenario, result);
    } else {
        std::cout << dcaq::report::human_compute(label_for(path), scenario, result);
    }
    return kExitOk;
}

int cmd_compare(const std::vector<std::string>& paths, const std::string& output,
                bool no_ts_override) {
    std::vector<std::pair<std::string, dcaq::DcaqResult>> results;
    results.reserve(paths.size());
    dcaq::EvaluateOptions options;
    options.honor_ts_override = !no_ts_override;
    for (const std::string& path : paths) {
        const dcaq::Scenario scenario = dcaq::parse_scenario_file(path);
        results.emplace_back(label_for(path), dcaq::evaluate(scenario, options));
    }
    const auto ranked = dcaq::rank(std::move(results));
    if (output == "machine") {
        std::cout << dcaq::report::machine_compare(ranked);
    } else {
        std::cout << dcaq::report::human_compare(ranked);
    }
    return kExitOk;
}

int cmd_simulate(const std::string& path, std::int64_t trials, std::uint64_t seed,
                 const std::string& output, bool no_ts_override) {
    dcaq::Scenario scenario = dcaq::parse_scenario_file(path);
    if (no_ts_override) {
        scenario.explicit_ts_override_ns.reset();
    }
    const dcaq::McSummary summary = dcaq::monte_carlo_dcaq(scenario, trials, seed);
    if (summary.degenerate) {
        std::cerr << "warning: network rate is not stochastic; all " << trials
                  << " trials are identical\n";
    }
    if (output == "machine") {
        std::cout << dcaq::report::machine_simulate(label_for(path), scenario, summary);
    } else {
        std::cout << dcaq::report::human_simulate(label_for(path), scenario, summary);
    }
    return kExitOk;
}

int cmd_validate(const dcaq::validation::ValidateOptions& options, const std::string& output) {
    const auto outcomes = dcaq::validation::run_all(options);
    if (output == "machine") {
        std::cout << dcaq::report::machine_validate(outcomes, options);
    } else {
        std::cout << dcaq::report::human_validate(outcomes, options);
    }
    for (const auto& outcome : outcomes) {
        if (!outcome.passed()) return kExitOracle;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dcaq: activeness quotient of a distributed component library"};
    app.require_subcommand(1);

    std::string output = "human";
    app.add_option("--output", output, "report format")
        ->check(CLI::IsMember({"human", "machine"}))
        ->capture_default_str();
    bool no_ts_override = false;
    app.add_flag("--no-ts-override", no_ts_override,
                 "ignore a scenario's explicit_ts_override and use the computed search time");

    std::string compute_path;
    CLI::App* compute = app.add_subcommand("compute", "evaluate one scenario");
    compute->add_option("scenario", compute_path, "scenario file")->required();

    std::vector<std::string> compare_paths;
    CLI::App* compare = app.add_subcommand("compare", "evaluate and rank several scenarios");
    compare->add_option("scenarios", compare_paths, "scenario files (at least two)");

    std::string simulate_path;
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo spread of the metric over network rates");
    simulate->add_option("scenario", simulate_path, "scenario file")->required();
    simulate->add_option("--trials", trials, "number of trials")->capture_default_str();
    simulate->add_option("--seed", seed, "generator seed")->capture_default_str();

    dcaq::validation::ValidateOptions validate_options;
    CLI::App* validate =
        app.add_subcommand("validate", "run the simulator oracle agreement suites");
    validate->add_option("--max-n", validate_options.max_n, "largest library size checked")
        ->capture_default_str();
    validate
        ->add_option("--tolerance", validate_options.tolerance,
                     "relative error bound for replay agreement")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(compute_path, output, no_ts_override);
        }
        if (compare->parsed()) {
            if (compare_paths.size() < 2) {
                std::cerr << "usage error: compare needs at least two scenario files\n";
                return kExitUsage;
            }
            return cmd_compare(compare_paths, output, no_ts_override);
        }
        if (simulate->parsed()) {
            return cmd_simulate(simulate_path, trials, seed, output, no_ts_override);
        }
        if (validate->parsed()) {
            return cmd_validate(validate_options, output);
        }
        std::cerr << "usage error: no subcommand\n";
        return kExitUsage;
    } catch (const dcaq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dcaq::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dcaq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
