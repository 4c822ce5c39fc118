#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcaq/model.hpp"

// Metric core: assembles availability, organizedness, access time and
// sublibrary count into the activeness quotient
//
//     DCAQ = (A_c * T_s) / (T * n_s)
//
// with T_s taken as its numeric value in nanoseconds and T in seconds. The
// mixed unit convention is deliberate: the quotient is a dimensionless index,
// and DcaqResult carries both raw terms so callers can rescale.

namespace dcaq {

struct ClassificationThresholds {
    double high_min = 1000.0;   // dcaq >= high_min: good organizedness, high responsiveness
    double average_min = 100.0; // dcaq >= average_min: average organizedness, low responsiveness

    bool operator==(const ClassificationThresholds&) const = default;
};

// (availability * ts_ns) / (access_time_seconds * sublibrary_count).
// Throws ValidationError on access_time_seconds <= 0 or sublibrary_count < 1.
double dcaq_value(int availability, double ts_ns, double access_time_seconds,
                  std::int64_t sublibrary_count);

// Number of sublibraries: one per machine-type/OS-type combination.
std::int64_t sublibrary_count(std::int64_t machine_types, std::int64_t os_types);

Classification classify(double dcaq_value, const ClassificationThresholds& thresholds = {});

struct EvaluateOptions {
    ClassificationThresholds thresholds{};
    // Explicit network rate for this evaluation (Monte Carlo trials, bound
    // computations). Ignored for local environments.
    std::optional<double> network_rate_sample{};
    // When false, a scenario's explicit_ts_override_ns is ignored and the
    // computed organizedness is used instead.
    bool honor_ts_override = true;

    bool operator==(const EvaluateOptions&) const = default;
};

DcaqResult evaluate(const Scenario& scenario, const EvaluateOptions& options = {});

// Descending by dcaq; ties by ascending access time, then label. Throws on
// an empty input list.
std::vector<std::pair<std::string, DcaqResult>> rank(
    std::vector<std::pair<std::string, DcaqResult>> results);

}  // namespace dcaq
