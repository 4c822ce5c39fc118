#include "dcaq/scenario_io.hpp"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

namespace dcaq {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ParseError(path.empty() ? message : path + ": " + message);
}

std::string join(const std::string& path, std::string_view key) {
    if (path.empty()) return std::string(key);
    return path + "." + std::string(key);
}

const json& require(const json& object, const std::string& path, std::string_view key) {
    const auto it = object.find(key);
    if (it == object.end()) {
        fail(path, "missing field '" + std::string(key) + "'");
    }
    return *it;
}

void require_object(const json& value, const std::string& path) {
    if (!value.is_object()) {
        fail(path, "expected an object");
    }
}

void reject_unknown(const json& object, const std::string& path,
                    std::initializer_list<std::string_view> known) {
    for (const auto& item : object.items()) {
        bool recognized = false;
        for (const std::string_view key : known) {
            if (item.key() == key) {
                recognized = true;
                break;
            }
        }
        if (!recognized) {
            fail(path, "unexpected field '" + item.key() + "'");
        }
    }
}

double as_number(const json& value, const std::string& path) {
    if (!value.is_number()) {
        fail(path, "expected a number");
    }
    return value.get<double>();
}

std::int64_t as_integer(const json& value, const std::string& path) {
    if (!value.is_number_integer()) {
        fail(path, "expected an integer");
    }
    return value.get<std::int64_t>();
}

bool as_bool(const json& value, const std::string& path) {
    if (!value.is_boolean()) {
        fail(path, "expected true or false");
    }
    return value.get<bool>();
}

std::string as_string(const json& value, const std::string& path) {
    if (!value.is_string()) {
        fail(path, "expected a string");
    }
    return value.get<std::string>();
}

// "50 Mbps", "0.05 bpns", "0.05 bits/ns" (unit suffix required for strings).
double parse_rate_string(const std::string& text, const std::string& path) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) {
        fail(path, "expected a rate like '50 Mbps' or '0.05 bpns'");
    }
    std::string_view unit(end);
    while (!unit.empty() && unit.front() == ' ') unit.remove_prefix(1);
    while (!unit.empty() && unit.back() == ' ') unit.remove_suffix(1);
    if (unit == "Mbps") {
        return value / 1000.0;  // 1 Mbps = 1e-3 bits/ns; division keeps 50 Mbps at exactly 0.05
    }
    if (unit == "bpns" || unit == "bits/ns") {
        return value;
    }
    fail(path, "unknown rate unit '" + std::string(unit) + "' (use Mbps, bpns or bits/ns)");
}

double as_rate(const json& value, const std::string& path) {
    if (value.is_number()) {
        return value.get<double>();
    }
    if (value.is_string()) {
        return parse_rate_string(value.get<std::string>(), path);
    }
    fail(path, "expected a rate (number in bits/ns, or string with a unit suffix)");
}

// Model constructors report bare field names; prepend the document path.
template <typename Fn>
auto with_path(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError& e) {
        throw ValidationError(join(path, e.field_path()), e.message());
    }
}

HardwareProfile parse_hardware(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown(value, path, {"bus_rate", "hit_ratio", "cache_time", "memory_time"});
    const double bus_rate = as_rate(require(value, path, "bus_rate"), join(path, "bus_rate"));
    const double hit_ratio = as_number(require(value, path, "hit_ratio"), join(path, "hit_ratio"));
    const double cache_time =
        as_number(require(value, path, "cache_time"), join(path, "cache_time"));
    const double memory_time =
        as_number(require(value, path, "memory_time"), join(path, "memory_time"));
    return with_path(path,
                     [&] { return HardwareProfile(bus_rate, hit_ratio, cache_time, memory_time); });
}

NetworkProfile parse_network_rate(const json& value, const std::string& path) {
    if (value.is_number() || value.is_string()) {
        const double rate = as_rate(value, path);
        return with_path(path, [&] { return NetworkProfile::fixed(rate); });
    }
    require_object(value, path);
    const std::string kind = as_string(require(value, path, "kind"), join(path, "kind"));
    if (kind == "fixed") {
        reject_unknown(value, path, {"kind", "rate"});
        const double rate = as_rate(require(value, path, "rate"), join(path, "rate"));
        return with_path(path, [&] { return NetworkProfile::fixed(rate); });
    }
    if (kind == "uniform") {
        reject_unknown(value, path, {"kind", "lo", "hi"});
        const double lo = as_rate(require(value, path, "lo"), join(path, "lo"));
        const double hi = as_rate(require(value, path, "hi"), join(path, "hi"));
        return with_path(path, [&] { return NetworkProfile::uniform(lo, hi); });
    }
    if (kind == "normal") {
        reject_unknown(value, path, {"kind", "mean", "stddev"});
        const double mean = as_rate(require(value, path, "mean"), join(path, "mean"));
        const double stddev =
            as_number(require(value, path, "stddev"), join(path, "stddev"));
        return with_path(path, [&] { return NetworkProfile::normal(mean, stddev); });
    }
    fail(join(path, "kind"), "expected 'fixed', 'uniform' or 'normal'");
}

NetworkProfile parse_network(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown(value, path, {"data_rate"});
    return parse_network_rate(require(value, path, "data_rate"), join(path, "data_rate"));
}

Environment parse_environment(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown(value, path, {"local", "remote"});
    const bool has_local = value.contains("local");
    const bool has_remote = value.contains("remote");
    if (has_local == has_remote) {
        fail(path, "expected exactly one of 'local' or 'remote'");
    }
    if (has_local) {
        const json& local = value.at("local");
        const std::string local_path = join(path, "local");
        require_object(local, local_path);
        reject_unknown(local, local_path, {"client"});
        return LocalEnvironment{
            parse_hardware(require(local, local_path, "client"), join(local_path, "client"))};
    }
    const json& remote = value.at("remote");
    const std::string remote_path = join(path, "remote");
    require_object(remote, remote_path);
    reject_unknown(remote, remote_path, {"client", "server", "network"});
    return RemoteEnvironment{
        parse_hardware(require(remote, remote_path, "client"), join(remote_path, "client")),
        parse_hardware(require(remote, remote_path, "server"), join(remote_path, "server")),
        parse_network(require(remote, remote_path, "network"), join(remote_path, "network"))};
}

DooclDescriptor parse_doocl(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown(value, path,
                   {"organization", "component_count", "iteration_time", "sublibrary_count",
                    "available"});
    const std::string organization_text =
        as_string(require(value, path, "organization"), join(path, "organization"));
    const auto organization = organization_from_string(organization_text);
    if (!organization.has_value()) {
        fail(join(path, "organization"),
             "unknown organization '" + organization_text +
                 "' (use sorted_sequential_list, balanced_binary_tree or "
                 "unsorted_sequential_list)");
    }
    const std::int64_t component_count =
        as_integer(require(value, path, "component_count"), join(path, "component_count"));
    const double iteration_time =
        as_number(require(value, path, "iteration_time"), join(path, "iteration_time"));
    const std::int64_t sublibraries =
        as_integer(require(value, path, "sublibrary_count"), join(path, "sublibrary_count"));
    const bool available = as_bool(require(value, path, "available"), join(path, "available"));
    return with_path(path, [&] {
        return DooclDescriptor(*organization, component_count, iteration_time, sublibraries,
                               available);
    });
}

Command parse_command(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown(value, path, {"text", "bits_per_char"});
    const std::string text = as_string(require(value, path, "text"), join(path, "text"));
    std::int64_t bits_per_char = 8;
    if (value.contains("bits_per_char")) {
        bits_per_char = as_integer(value.at("bits_per_char"), join(path, "bits_per_char"));
    }
    return with_path(path, [&] { return Command(text, bits_per_char); });
}

Component parse_component(const json& value, const std::string& path) {
    require_object(value, path);
    reject_unknown(value, path, {"name", "lines", "chars_per_line", "bits_per_char"});
    const std::string name = as_string(require(value, path, "name"), join(path, "name"));
    const std::int64_t lines = as_integer(require(value, path, "lines"), join(path, "lines"));
    const std::int64_t chars =
        as_integer(require(value, path, "chars_per_line"), join(path, "chars_per_line"));
    const std::int64_t bits =
        as_integer(require(value, path, "bits_per_char"), join(path, "bits_per_char"));
    return with_path(path, [&] { return Component(name, lines, chars, bits); });
}

ordered_json render_hardware(const HardwareProfile& hw) {
    return ordered_json{{"bus_rate", hw.bus_rate()},
                        {"hit_ratio", hw.hit_ratio()},
                        {"cache_time", hw.cache_time_ns()},
                        {"memory_time", hw.memory_time_ns()}};
}

ordered_json render_network(const NetworkProfile& network) {
    switch (network.kind()) {
        case RateKind::Fixed:
            return ordered_json{{"data_rate", network.fixed_rate()}};
        case RateKind::Uniform:
            return ordered_json{{"data_rate",
                                 ordered_json{{"kind", "uniform"},
                                              {"lo", network.uniform_lo()},
                                              {"hi", network.uniform_hi()}}}};
        case RateKind::Normal:
            return ordered_json{{"data_rate",
                                 ordered_json{{"kind", "normal"},
                                              {"mean", network.normal_mean()},
                                              {"stddev", network.normal_stddev()}}}};
    }
    throw Error("unreachable network rate kind");
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    require_object(document, "");
    reject_unknown(document, "",
                   {"doocl", "environment", "command", "component", "explicit_ts_override"});

    Scenario scenario{
        parse_doocl(require(document, "", "doocl"), "doocl"),
        parse_environment(require(document, "", "environment"), "environment"),
        parse_command(require(document, "", "command"), "command"),
        parse_component(require(document, "", "component"), "component"),
        std::nullopt,
    };
    if (document.contains("explicit_ts_override")) {
        const double override_ns =
            as_number(document.at("explicit_ts_override"), "explicit_ts_override");
        if (!(override_ns >= 0.0)) {
            throw ValidationError("explicit_ts_override",
                                  "must be a nonnegative time in nanoseconds");
        }
        scenario.explicit_ts_override_ns = override_ns;
    }
    return scenario;
}

Scenario parse_scenario_file(const std::filesystem::path& path) {
    std::ifstream input(path);
    if (!input) {
        throw ParseError("cannot open scenario file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return parse_scenario_text(buffer.str());
}

std::string render_scenario(const Scenario& scenario) {
    ordered_json document;
    document["doocl"] = ordered_json{
        {"organization", std::string(to_string(scenario.doocl.organization()))},
        {"component_count", scenario.doocl.component_count()},
        {"iteration_time", scenario.doocl.iteration_time_ns()},
        {"sublibrary_count", scenario.doocl.sublibrary_count()},
        {"available", scenario.doocl.available()},
    };
    if (const auto* local = std::get_if<LocalEnvironment>(&scenario.environment)) {
        document["environment"] =
            ordered_json{{"local", ordered_json{{"client", render_hardware(local->client)}}}};
    } else {
        const auto& remote = std::get<RemoteEnvironment>(scenario.environment);
        document["environment"] =
            ordered_json{{"remote", ordered_json{{"client", render_hardware(remote.client)},
                                                 {"server", render_hardware(remote.server)},
                                                 {"network", render_network(remote.network)}}}};
    }
    document["command"] = ordered_json{{"text", scenario.command.text()},
                                       {"bits_per_char", scenario.command.bits_per_char()}};
    document["component"] = ordered_json{{"name", scenario.component.name()},
                                         {"lines", scenario.component.lines()},
                                         {"chars_per_line", scenario.component.chars_per_line()},
                                         {"bits_per_char", scenario.component.bits_per_char()}};
    if (scenario.explicit_ts_override_ns.has_value()) {
        document["explicit_ts_override"] = *scenario.explicit_ts_override_ns;
    }
    return document.dump(2) + "\n";
}

}  // namespace dcaq
