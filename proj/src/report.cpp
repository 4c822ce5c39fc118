#include "dcaq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dcaq::report {

namespace {

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

// Machine-report contract: 17 significant digits.
std::string fmt17(double value) { return fmt("%.17g", value); }

// Human-report numbers: enough digits to be exact for the library's typical
// magnitudes without trailing noise.
std::string fmt10(double value) { return fmt("%.10g", value); }

std::string multi_unit(double ns) {
    return fmt("%s ns = %s us = %s ms = %s s", fmt10(ns).c_str(), fmt10(ns / 1e3).c_str(),
               fmt10(ns / 1e6).c_str(), fmt10(ns / 1e9).c_str());
}

std::string describe_network(const NetworkProfile& network) {
    switch (network.kind()) {
        case RateKind::Fixed:
            return fmt("fixed %s bits/ns", fmt10(network.fixed_rate()).c_str());
        case RateKind::Uniform:
            return fmt("uniform [%s, %s] bits/ns", fmt10(network.uniform_lo()).c_str(),
                       fmt10(network.uniform_hi()).c_str());
        case RateKind::Normal:
            return fmt("normal (mean %s, stddev %s) bits/ns, truncated at > 0",
                       fmt10(network.normal_mean()).c_str(),
                       fmt10(network.normal_stddev()).c_str());
    }
    return "unknown";
}

const char* stage_description(const std::string& label, bool local) {
    if (local) {
        if (label == "t1") return "command to processor over client bus";
        if (label == "t2") return "memory search at client";
        if (label == "t3") return "component to display over client bus";
    } else {
        if (label == "t1") return "command to processor over client bus";
        if (label == "t2") return "command over network to server";
        if (label == "t3") return "memory search at server";
        if (label == "t4") return "component to server network interface";
        if (label == "t5") return "component over network to client";
        if (label == "t6") return "component to client display bus";
    }
    return "";
}

// Table 1 style label: t1 -> t_1.
std::string display_label(const std::string& label) {
    if (label.size() == 2) return label.substr(0, 1) + "_" + label.substr(1);
    return label;
}

void append_stage_table(std::ostringstream& out, const DcaqResult& result) {
    const bool local = result.access_time_breakdown.size() == 3;
    out << fmt("  %-5s %-38s %8s %12s %16s\n", "stage", "description", "bits", "rate (b/ns)",
               "duration (ns)");
    for (const StageTiming& stage : result.access_time_breakdown) {
        std::string bits = stage.bits.has_value() ? fmt("%lld", (long long)*stage.bits) : "-";
        std::string rate = stage.rate_bpns.has_value() ? fmt10(*stage.rate_bpns) : "-";
        out << fmt("  %-5s %-38s %8s %12s %16s\n", display_label(stage.label).c_str(),
                   stage_description(stage.label, local), bits.c_str(), rate.c_str(),
                   fmt10(stage.duration_ns).c_str());
        if (stage.cache.has_value()) {
            out << fmt("        (hit ratio %s, cache %s ns, memory %s ns)\n",
                       fmt10(stage.cache->hit_ratio).c_str(),
                       fmt10(stage.cache->cache_time_ns).c_str(),
                       fmt10(stage.cache->memory_time_ns).c_str());
        }
    }
    out << "  total access time (T): " << multi_unit(result.access_time_ns) << "\n";
}

// Cosmetic guard: an override within rounding noise of the computed value is
// not worth a deviation note.
bool meaningfully_differs(double declared, double computed) {
    const double scale = std::max(std::abs(declared), std::abs(computed));
    return std::abs(declared - computed) > 1e-9 * scale;
}

void append_ts_derivation(std::ostringstream& out, const Scenario& scenario,
                          const DcaqResult& result) {
    out << "organizedness (T_s)\n";
    out << fmt("  organization: %s over %lld components\n",
               std::string(to_string(scenario.doocl.organization())).c_str(),
               (long long)scenario.doocl.component_count());
    out << fmt("  computed: %lld iterations x %s ns = %s ns\n",
               (long long)result.search.iterations,
               fmt10(result.search.iteration_time_ns).c_str(),
               fmt10(result.search.ts_ns).c_str());
    if (scenario.explicit_ts_override_ns.has_value()) {
        const double declared = *scenario.explicit_ts_override_ns;
        if (result.ts_overridden) {
            out << fmt("  explicit_ts_override: %s ns (applied)\n", fmt10(declared).c_str());
            if (meaningfully_differs(declared, result.search.ts_ns)) {
                out << fmt("  note: override %s ns differs from the computed value %s ns\n",
                           fmt10(declared).c_str(), fmt10(result.search.ts_ns).c_str());
            }
        } else {
            out << fmt("  explicit_ts_override: %s ns (disabled, using computed value)\n",
                       fmt10(declared).c_str());
            if (meaningfully_differs(declared, result.search.ts_ns)) {
                out << fmt("  note: computed T_s %s ns deviates from the declared override %s ns\n",
                           fmt10(result.search.ts_ns).c_str(), fmt10(declared).c_str());
            }
        }
    }
    out << fmt("  T_s used: %s ns\n", fmt10(result.ts_ns).c_str());
}

// Flat JSON object with insertion-ordered keys. Doubles go through fmt17 so
// the byte-identical output contract holds.
class FlatJsonWriter {
public:
    void field(std::string_view key, double value) { raw(key, fmt17(value)); }
    void field(std::string_view key, std::int64_t value) {
        raw(key, fmt("%lld", (long long)value));
    }
    void field(std::string_view key, int value) { field(key, (std::int64_t)value); }
    void field(std::string_view key, bool value) { raw(key, value ? "true" : "false"); }
    void field(std::string_view key, std::string_view value) {
        raw(key, "\"" + escape(value) + "\"");
    }
    // keeps string literals away from the bool overload
    void field(std::string_view key, const char* value) { field(key, std::string_view(value)); }

    std::string str() const { return "{" + body_ + "}"; }

private:
    static std::string escape(std::string_view text) {
        std::string out;
        out.reserve(text.size());
        for (const char c : text) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out += c;
                    }
            }
        }
        return out;
    }

    void raw(std::string_view key, const std::string& value) {
        if (!body_.empty()) body_ += ",";
        body_ += "\"" + escape(key) + "\":" + value;
    }

    std::string body_;
};

void echo_hardware(FlatJsonWriter& writer, const char* prefix, const HardwareProfile& hw) {
    const std::string p(prefix);
    writer.field(p + "_bus_rate_bpns", hw.bus_rate());
    writer.field(p + "_hit_ratio", hw.hit_ratio());
    writer.field(p + "_cache_time_ns", hw.cache_time_ns());
    writer.field(p + "_memory_time_ns", hw.memory_time_ns());
}

void echo_network(FlatJsonWriter& writer, const NetworkProfile& network) {
    switch (network.kind()) {
        case RateKind::Fixed:
            writer.field("network_kind", "fixed");
            writer.field("network_rate_bpns", network.fixed_rate());
            break;
        case RateKind::Uniform:
            writer.field("network_kind", "uniform");
            writer.field("network_lo_bpns", network.uniform_lo());
            writer.field("network_hi_bpns", network.uniform_hi());
            break;
        case RateKind::Normal:
            writer.field("network_kind", "normal");
            writer.field("network_mean_bpns", network.normal_mean());
            writer.field("network_stddev_bpns", network.normal_stddev());
            break;
    }
}

void machine_result_fields(FlatJsonWriter& writer, const std::string& label,
                           const Scenario& scenario, const DcaqResult& result) {
    writer.field("label", label);
    writer.field("environment", is_remote(scenario.environment) ? "remote" : "local");
    writer.field("organization", to_string(scenario.doocl.organization()));
    writer.field("component_count", scenario.doocl.component_count());
    writer.field("iteration_time_ns", scenario.doocl.iteration_time_ns());
    writer.field("search_iterations", result.search.iterations);
    writer.field("computed_ts_ns", result.search.ts_ns);
    if (scenario.explicit_ts_override_ns.has_value()) {
        writer.field("ts_override_ns", *scenario.explicit_ts_override_ns);
    }
    writer.field("ts_override_applied", result.ts_overridden);
    writer.field("ts_ns", result.ts_ns);
    writer.field("availability", result.availability);
    writer.field("sublibrary_count", result.sublibrary_count);
    writer.field("command_text", scenario.command.text());
    writer.field("command_bits", scenario.command.bit_size());
    writer.field("component_name", scenario.component.name());
    writer.field("component_bits", scenario.component.bit_size());
    echo_hardware(writer, "client", client_profile(scenario.environment));
    if (const auto* remote = std::get_if<RemoteEnvironment>(&scenario.environment)) {
        echo_hardware(writer, "server", remote->server);
        // rate actually used for this evaluation (sample-aware)
        writer.field("network_rate_used_bpns", *result.access_time_breakdown[1].rate_bpns);
        echo_network(writer, remote->network);
    }
    for (const StageTiming& stage : result.access_time_breakdown) {
        writer.field("stage_" + stage.label + "_ns", stage.duration_ns);
    }
    writer.field("access_time_ns", result.access_time_ns);
    writer.field("access_time_s", result.access_time_seconds);
    writer.field("dcaq", result.dcaq);
    writer.field("organizedness", to_string(result.classification.organizedness));
    writer.field("responsiveness", to_string(result.classification.responsiveness));
}

}  // namespace

std::string human_compute(const std::string& label, const Scenario& scenario,
                          const DcaqResult& result) {
    std::ostringstream out;
    out << fmt("scenario: %s (%s environment)\n", label.c_str(),
               is_remote(scenario.environment) ? "remote" : "local");
    out << fmt("  component: %s (%lld bits), command: %s (%lld bits)\n",
               scenario.component.name().c_str(), (long long)scenario.component.bit_size(),
               scenario.command.text().c_str(), (long long)scenario.command.bit_size());
    out << fmt("  availability (A_c): %d\n", result.availability);
    out << fmt("  sublibraries (n_s): %lld\n\n", (long long)result.sublibrary_count);
    out << "access time\n";
    append_stage_table(out, result);
    out << "\n";
    append_ts_derivation(out, scenario, result);
    out << "\n";
    out << fmt("DCAQ = (A_c x T_s) / (T x n_s) = (%d x %s) / (%s x %lld) = %s\n",
               result.availability, fmt10(result.ts_ns).c_str(),
               fmt10(result.access_time_seconds).c_str(), (long long)result.sublibrary_count,
               fmt10(result.dcaq).c_str());
    out << fmt("classification: %s organizedness, %s responsiveness\n",
               std::string(to_string(result.classification.organizedness)).c_str(),
               std::string(to_string(result.classification.responsiveness)).c_str());
    return out.str();
}

std::string machine_compute(const std::string& label, const Scenario& scenario,
                            const DcaqResult& result) {
    FlatJsonWriter writer;
    machine_result_fields(writer, label, scenario, result);
    return writer.str() + "\n";
}

std::string human_compare(const std::vector<std::pair<std::string, DcaqResult>>& ranked) {
    std::ostringstream out;
    out << fmt("%4s  %-24s %14s %14s %12s %6s  %s\n", "rank", "label", "DCAQ", "T (s)",
               "T_s (ns)", "n_s", "classification");
    int position = 1;
    for (const auto& [label, result] : ranked) {
        out << fmt("%4d  %-24s %14s %14s %12s %6lld  %s/%s\n", position, label.c_str(),
                   fmt10(result.dcaq).c_str(), fmt10(result.access_time_seconds).c_str(),
                   fmt10(result.ts_ns).c_str(), (long long)result.sublibrary_count,
                   std::string(to_string(result.classification.organizedness)).c_str(),
                   std::string(to_string(result.classification.responsiveness)).c_str());
        ++position;
    }
    return out.str();
}

std::string machine_compare(const std::vector<std::pair<std::string, DcaqResult>>& ranked) {
    std::string out = "[";
    int position = 1;
    for (const auto& [label, result] : ranked) {
        FlatJsonWriter writer;
        writer.field("rank", (std::int64_t)position);
        writer.field("label", label);
        writer.field("dcaq", result.dcaq);
        writer.field("access_time_s", result.access_time_seconds);
        writer.field("ts_ns", result.ts_ns);
        writer.field("availability", result.availability);
        writer.field("sublibrary_count", result.sublibrary_count);
        writer.field("organizedness", to_string(result.classification.organizedness));
        writer.field("responsiveness", to_string(result.classification.responsiveness));
        if (position > 1) out += ",";
        out += "\n" + writer.str();
        ++position;
    }
    out += "\n]\n";
    return out;
}

std::string human_simulate(const std::string& label, const Scenario& scenario,
                           const McSummary& summary) {
    std::ostringstream out;
    out << fmt("monte carlo: %s\n", label.c_str());
    out << fmt("  trials: %lld, seed: %llu, generator: %s\n", (long long)summary.trials,
               (unsigned long long)summary.seed, summary.generator.c_str());
    if (const auto* remote = std::get_if<RemoteEnvironment>(&scenario.environment)) {
        out << fmt("  network rate: %s\n", describe_network(remote->network).c_str());
    } else {
        out << "  network rate: none (local environment)\n";
    }
    if (summary.degenerate) {
        out << "  warning: no stochastic rate to sample; all trials are identical\n";
    }
    out << fmt("  dcaq mean %s, stddev %s\n", fmt10(summary.mean).c_str(),
               fmt10(summary.stddev).c_str());
    out << fmt("  dcaq min %s, p5 %s, p50 %s, p95 %s, max %s\n", fmt10(summary.min).c_str(),
               fmt10(summary.p5).c_str(), fmt10(summary.p50).c_str(), fmt10(summary.p95).c_str(),
               fmt10(summary.max).c_str());
    return out.str();
}

std::string machine_simulate(const std::string& label, const Scenario& scenario,
                             const McSummary& summary) {
    FlatJsonWriter writer;
    writer.field("label", label);
    writer.field("trials", summary.trials);
    writer.field("seed", (std::int64_t)summary.seed);
    writer.field("generator", summary.generator);
    if (const auto* remote = std::get_if<RemoteEnvironment>(&scenario.environment)) {
        echo_network(writer, remote->network);
    } else {
        writer.field("network_kind", "none");
    }
    writer.field("degenerate", summary.degenerate);
    writer.field("dcaq_mean", summary.mean);
    writer.field("dcaq_stddev", summary.stddev);
    writer.field("dcaq_min", summary.min);
    writer.field("dcaq_p5", summary.p5);
    writer.field("dcaq_p50", summary.p50);
    writer.field("dcaq_p95", summary.p95);
    writer.field("dcaq_max", summary.max);
    return writer.str() + "\n";
}

std::string human_validate(const std::vector<validation::SuiteOutcome>& outcomes,
                           const validation::ValidateOptions& options) {
    std::ostringstream out;
    out << fmt("oracle agreement (max N %lld, tolerance %s, %lld replay scenarios, seed %llu)\n",
               (long long)options.max_n, fmt10(options.tolerance).c_str(),
               (long long)options.replay_scenarios, (unsigned long long)options.seed);
    out << fmt("  %-38s %8s %9s %14s\n", "suite", "checks", "failures", "worst rel err");
    bool all_passed = true;
    for (const validation::SuiteOutcome& outcome : outcomes) {
        out << fmt("  %-38s %8lld %9lld %14s  %s\n", outcome.name.c_str(),
                   (long long)outcome.checks, (long long)outcome.failures,
                   fmt("%.3e", outcome.worst_relative_error).c_str(),
                   outcome.passed() ? "pass" : "FAIL");
        if (!outcome.first_failure.empty()) {
            out << fmt("      first failure: %s\n", outcome.first_failure.c_str());
        }
        all_passed = all_passed && outcome.passed();
    }
    out << fmt("result: %s\n", all_passed ? "PASS" : "FAIL");
    return out.str();
}

std::string machine_validate(const std::vector<validation::SuiteOutcome>& outcomes,
                             const validation::ValidateOptions& options) {
    FlatJsonWriter writer;
    writer.field("max_n", options.max_n);
    writer.field("tolerance", options.tolerance);
    writer.field("replay_scenarios", options.replay_scenarios);
    writer.field("seed", (std::int64_t)options.seed);
    bool all_passed = true;
    int index = 1;
    for (const validation::SuiteOutcome& outcome : outcomes) {
        const std::string prefix = fmt("suite%d", index);
        writer.field(prefix + "_name", outcome.name);
        writer.field(prefix + "_checks", outcome.checks);
        writer.field(prefix + "_failures", outcome.failures);
        writer.field(prefix + "_worst_relative_error", outcome.worst_relative_error);
        all_passed = all_passed && outcome.passed();
        ++index;
    }
    writer.field("passed", all_passed);
    return writer.str() + "\n";
}

}  // namespace dcaq::report
