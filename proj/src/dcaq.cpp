#include "dcaq/dcaq.hpp"

#include <algorithm>
#include <cmath>

#include "dcaq/access_time.hpp"
#include "dcaq/organizedness.hpp"

namespace dcaq {

namespace {

void check_thresholds(const ClassificationThresholds& t) {
    if (!std::isfinite(t.high_min) || !std::isfinite(t.average_min) ||
        !(t.high_min > t.average_min) || !(t.average_min > 0.0)) {
        throw ValidationError("thresholds", "require high_min > average_min > 0");
    }
}

}  // namespace

double dcaq_value(int availability, double ts_ns, double access_time_seconds,
                  std::int64_t sublibrary_count) {
    if (availability != 0 && availability != 1) {
        throw ValidationError("availability", "must be 0 or 1");
    }
    if (!std::isfinite(ts_ns) || !(ts_ns >= 0.0)) {
        throw ValidationError("ts_ns", "must be a nonnegative, finite time");
    }
    if (!std::isfinite(access_time_seconds) || !(access_time_seconds > 0.0)) {
        throw ValidationError("access_time_seconds", "must be a positive, finite time");
    }
    if (sublibrary_count < 1) {
        throw ValidationError("sublibrary_count", "must be a positive count (>= 1)");
    }
    return (static_cast<double>(availability) * ts_ns) /
           (access_time_seconds * static_cast<double>(sublibrary_count));
}

std::int64_t sublibrary_count(std::int64_t machine_types, std::int64_t os_types) {
    if (machine_types < 1) {
        throw ValidationError("machine_types", "must be a positive count (>= 1)");
    }
    if (os_types < 1) {
        throw ValidationError("os_types", "must be a positive count (>= 1)");
    }
    std::int64_t out = 0;
    if (__builtin_mul_overflow(machine_types, os_types, &out)) {
        throw ValidationError("sublibrary_count", "overflows the 64-bit integer range");
    }
    return out;
}

Classification classify(double dcaq_value, const ClassificationThresholds& thresholds) {
    check_thresholds(thresholds);
    if (!std::isfinite(dcaq_value) || dcaq_value < 0.0) {
        throw ValidationError("dcaq", "must be a nonnegative, finite value");
    }
    if (dcaq_value >= thresholds.high_min) {
        return {OrganizednessLabel::Good, ResponsivenessLabel::High};
    }
    if (dcaq_value >= thresholds.average_min) {
        return {OrganizednessLabel::Average, ResponsivenessLabel::Low};
    }
    return {OrganizednessLabel::Poor, ResponsivenessLabel::Low};
}

DcaqResult evaluate(const Scenario& scenario, const EvaluateOptions& options) {
    check_thresholds(options.thresholds);
    const DooclDescriptor& doocl = scenario.doocl;

    DcaqResult result;
    result.search = organizedness_time(doocl.organization(), doocl.component_count(),
                                       doocl.iteration_time_ns());
    result.ts_ns = result.search.ts_ns;
    if (options.honor_ts_override && scenario.explicit_ts_override_ns.has_value()) {
        const double override_ns = *scenario.explicit_ts_override_ns;
        if (!std::isfinite(override_ns) || !(override_ns >= 0.0)) {
            throw ValidationError("explicit_ts_override",
                                  "must be a nonnegative time in nanoseconds");
        }
        result.ts_ns = override_ns;
        result.ts_overridden = true;
    }

    AccessTimeBreakdown breakdown = [&]() {
        if (const auto* local = std::get_if<LocalEnvironment>(&scenario.environment)) {
            return local_access_time(scenario.command, scenario.component, local->client);
        }
        const auto& remote = std::get<RemoteEnvironment>(scenario.environment);
        double rate = 0.0;
        if (options.network_rate_sample.has_value()) {
            rate = *options.network_rate_sample;
        } else if (remote.network.kind() == RateKind::Fixed) {
            rate = remote.network.fixed_rate();
        } else {
            throw ValidationError("environment.network.data_rate",
                                  "stochastic rate has no single value; provide a rate sample "
                                  "or use the Monte Carlo mode");
        }
        return remote_access_time(scenario.command, scenario.component, remote.client,
                                  remote.server, rate);
    }();

    result.access_time_breakdown = breakdown.stages();
    result.access_time_ns = breakdown.total_ns();
    result.access_time_seconds = breakdown.total_ns() / 1e9;
    result.availability = doocl.available() ? 1 : 0;
    result.sublibrary_count = doocl.sublibrary_count();
    result.dcaq = dcaq_value(result.availability, result.ts_ns, result.access_time_seconds,
                             result.sublibrary_count);
    result.classification = classify(result.dcaq, options.thresholds);
    return result;
}

std::vector<std::pair<std::string, DcaqResult>> rank(
    std::vector<std::pair<std::string, DcaqResult>> results) {
    if (results.empty()) {
        throw ValidationError("results", "cannot rank an empty list");
    }
    std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
        if (a.second.dcaq != b.second.dcaq) return a.second.dcaq > b.second.dcaq;
        if (a.second.access_time_seconds != b.second.access_time_seconds) {
            return a.second.access_time_seconds < b.second.access_time_seconds;
        }
        return a.first < b.first;
    });
    return results;
}

}  // namespace dcaq
