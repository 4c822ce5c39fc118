// Command-line surface checks: exit codes, output formats, determinism.
// Usage: cli_tests <path-to-dcaq-binary> <scenario-directory>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "subprocess.hpp"

namespace {

int failures = 0;

void check(bool condition, const std::string& what) {
    if (condition) {
        std::printf("[ok]   %s\n", what.c_str());
    } else {
        std::printf("[FAIL] %s\n", what.c_str());
        ++failures;
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: cli_tests <dcaq-binary> <scenario-dir>\n");
        return 2;
    }
    using dcaq::test::quoted;
    using dcaq::test::run_command;
    const std::string cli = dcaq::test::quoted(argv[1]);
    const std::string dir(argv[2]);
    const std::string ill1 = quoted(dir + "/illustration1.json");
    const std::string ill2 = quoted(dir + "/illustration2.json");
    const std::string ill2_uniform = quoted(dir + "/illustration2_uniform.json");

    // exit code 1: usage problems
    check(run_command(cli + " 2>/dev/null").exit_code == 1, "no subcommand exits 1");
    check(run_command(cli + " frobnicate 2>/dev/null").exit_code == 1,
          "unknown subcommand exits 1");
    check(run_command(cli + " compare " + ill1 + " 2>/dev/null").exit_code == 1,
          "compare with one file exits 1");
    check(run_command(cli + " --output pretty compute " + ill1 + " 2>/dev/null").exit_code == 1,
          "unknown output format exits 1");

    // exit code 2: parse and validation problems
    check(run_command(cli + " compute /nonexistent.json 2>/dev/null").exit_code == 2,
          "missing file exits 2");
    const std::string bad_path = "/tmp/dcaq_bad_scenario.json";
    {
        std::ifstream source(dir + "/illustration1.json");
        std::string text((std::istreambuf_iterator<char>(source)),
                         std::istreambuf_iterator<char>());
        text.replace(text.find("0.9"), 3, "1.3");
        std::ofstream out(bad_path);
        out << text;
    }
    const auto bad = run_command(cli + " compute " + quoted(bad_path) + " 2>&1");
    check(bad.exit_code == 2, "invalid hit ratio exits 2");
    check(contains(bad.output, "hit_ratio"), "diagnostic names the hit_ratio field");
    std::remove(bad_path.c_str());

    // compute: machine output carries the metric values
    const auto compute1 = run_command(cli + " --output machine compute " + ill1);
    check(compute1.exit_code == 0, "compute illustration1 exits 0");
    {
        const auto parsed = nlohmann::json::parse(compute1.output);
        const double dcaq = parsed.at("dcaq").get<double>();
        check(dcaq >= 2883.4 && dcaq <= 2883.7, "illustration1 dcaq in [2883.4, 2883.7]");
        check(parsed.at("access_time_ns").get<double>() == 83230.0,
              "illustration1 access time is 83230 ns");
    }

    const auto compute2 = run_command(cli + " --output machine compute " + ill2);
    {
        const auto parsed = nlohmann::json::parse(compute2.output);
        const double dcaq = parsed.at("dcaq").get<double>();
        check(dcaq >= 203.77 && dcaq <= 203.79, "illustration2 dcaq in [203.77, 203.79]");
        check(parsed.at("ts_override_applied") == true, "illustration2 applies its override");
    }

    // --no-ts-override recomputes and flags the difference
    const auto no_override =
        run_command(cli + " --output machine --no-ts-override compute " + ill2);
    {
        const auto parsed = nlohmann::json::parse(no_override.output);
        check(parsed.at("ts_override_applied") == false, "--no-ts-override disables override");
        const double dcaq = parsed.at("dcaq").get<double>();
        check(dcaq > 20.377 && dcaq < 20.379, "recomputed dcaq near 20.378");
    }
    const auto no_override_human = run_command(cli + " --no-ts-override compute " + ill2);
    check(contains(no_override_human.output, "deviates from the declared override"),
          "human report flags the override deviation");

    // compare: illustration1 ranks first
    const auto compare = run_command(cli + " --output machine compare " + ill1 + " " + ill2);
    check(compare.exit_code == 0, "compare exits 0");
    {
        const auto parsed = nlohmann::json::parse(compare.output);
        check(parsed.at(0).at("label") == "illustration1", "illustration1 ranks first");
        check(parsed.at(1).at("label") == "illustration2", "illustration2 ranks second");
    }
    const auto compare_human = run_command(cli + " compare " + ill2 + " " + ill1);
    check(compare_human.exit_code == 0, "human compare exits 0");

    // simulate: deterministic machine output, warning for fixed rates
    const std::string simulate_cmd =
        cli + " --output machine simulate " + ill2_uniform + " --trials 1000 --seed 1";
    const auto simulate_a = run_command(simulate_cmd + " 2>/dev/null");
    const auto simulate_b = run_command(simulate_cmd + " 2>/dev/null");
    check(simulate_a.exit_code == 0, "simulate exits 0");
    check(!simulate_a.output.empty() && simulate_a.output == simulate_b.output,
          "same seed gives byte-identical simulate output");
    const auto simulate_seed2 =
        run_command(cli + " --output machine simulate " + ill2_uniform +
                    " --trials 1000 --seed 2 2>/dev/null");
    check(simulate_seed2.output != simulate_a.output, "another seed changes the output");

    const auto fixed_rate = run_command(cli + " simulate " + ill2 + " --trials 10 2>&1");
    check(fixed_rate.exit_code == 0, "fixed-rate simulate exits 0");
    check(contains(fixed_rate.output, "warning"), "fixed-rate simulate warns");

    // validate: green by default, oracle failure exits 3
    const auto validate = run_command(cli + " validate --max-n 128 2>/dev/null");
    check(validate.exit_code == 0, "validate --max-n 128 exits 0");
    const auto validate_strict =
        run_command(cli + " validate --max-n 16 --tolerance 0 2>/dev/null");
    check(validate_strict.exit_code == 3, "validate with tolerance 0 exits 3");

    if (failures != 0) {
        std::printf("%d check(s) failed\n", failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
