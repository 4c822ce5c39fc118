#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dcaq/errors.hpp"

// Domain value types shared by every other module. All types are immutable
// values with structural equality; constructors reject out-of-range fields.
// Canonical units throughout: bits, nanoseconds, bits per nanosecond.

namespace dcaq {

enum class Organization {
    SortedSequentialList,   // binary search over a sorted list
    BalancedBinaryTree,     // balanced routing tree
    UnsortedSequentialList  // linear scan, worst case
};

std::string_view to_string(Organization org) noexcept;
std::optional<Organization> organization_from_string(std::string_view text) noexcept;

// A retrievable library component. Its size in bits is
// lines * chars_per_line * bits_per_char, computed exactly in integers.
class Component {
public:
    Component(std::string name, std::int64_t lines, std::int64_t chars_per_line,
              std::int64_t bits_per_char);

    const std::string& name() const noexcept { return name_; }
    std::int64_t lines() const noexcept { return lines_; }
    std::int64_t chars_per_line() const noexcept { return chars_per_line_; }
    std::int64_t bits_per_char() const noexcept { return bits_per_char_; }
    std::int64_t bit_size() const noexcept { return bit_size_; }

    bool operator==(const Component&) const = default;

private:
    std::string name_;
    std::int64_t lines_;
    std::int64_t chars_per_line_;
    std::int64_t bits_per_char_;
    std::int64_t bit_size_;
};

// The retrieval command typed by the programmer.
class Command {
public:
    explicit Command(std::string text, std::int64_t bits_per_char = 8);

    const std::string& text() const noexcept { return text_; }
    std::int64_t bits_per_char() const noexcept { return bits_per_char_; }
    std::int64_t bit_size() const noexcept { return bit_size_; }

    bool operator==(const Command&) const = default;

private:
    std::string text_;
    std::int64_t bits_per_char_;
    std::int64_t bit_size_;
};

// Bus transfer rate plus memory-hierarchy parameters for one machine.
class HardwareProfile {
public:
    HardwareProfile(double bus_rate_bpns, double hit_ratio, double cache_time_ns,
                    double memory_time_ns);

    double bus_rate() const noexcept { return bus_rate_; }    // bits per nanosecond
    double hit_ratio() const noexcept { return hit_ratio_; }  // in [0, 1]
    double cache_time_ns() const noexcept { return cache_time_ns_; }
    double memory_time_ns() const noexcept { return memory_time_ns_; }

    bool operator==(const HardwareProfile&) const = default;

private:
    double bus_rate_;
    double hit_ratio_;
    double cache_time_ns_;
    double memory_time_ns_;
};

enum class RateKind { Fixed, Uniform, Normal };

// Network data rate: a fixed value or a sampling distribution.
// Every fixed or sampled rate is positive; normal is truncated at > 0
// when sampled (simulator module).
class NetworkProfile {
public:
    static NetworkProfile fixed(double rate_bpns);
    static NetworkProfile uniform(double lo_bpns, double hi_bpns);
    static NetworkProfile normal(double mean_bpns, double stddev_bpns);

    RateKind kind() const noexcept { return kind_; }
    bool is_stochastic() const noexcept { return kind_ != RateKind::Fixed; }

    double fixed_rate() const;    // Fixed only
    double uniform_lo() const;    // Uniform only
    double uniform_hi() const;    // Uniform only
    double normal_mean() const;   // Normal only
    double normal_stddev() const; // Normal only

    bool operator==(const NetworkProfile&) const = default;

private:
    NetworkProfile(RateKind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

    RateKind kind_;
    double a_;  // rate / lo / mean
    double b_;  // unused / hi / stddev
};

struct LocalEnvironment {
    HardwareProfile client;

    bool operator==(const LocalEnvironment&) const = default;
};

struct RemoteEnvironment {
    HardwareProfile client;
    HardwareProfile server;  // server bus rate plays the role of r_s
    NetworkProfile network;

    bool operator==(const RemoteEnvironment&) const = default;
};

using Environment = std::variant<LocalEnvironment, RemoteEnvironment>;

bool is_remote(const Environment& env) noexcept;
const HardwareProfile& client_profile(const Environment& env) noexcept;

// Library organization, size, per-iteration search cost, sublibrary count
// and the availability flag for the requested component.
class DooclDescriptor {
public:
    DooclDescriptor(Organization organization, std::int64_t component_count,
                    double iteration_time_ns, std::int64_t sublibrary_count,
                    bool available);

    Organization organization() const noexcept { return organization_; }
    std::int64_t component_count() const noexcept { return component_count_; }
    double iteration_time_ns() const noexcept { return iteration_time_ns_; }
    std::int64_t sublibrary_count() const noexcept { return sublibrary_count_; }
    bool available() const noexcept { return available_; }

    bool operator==(const DooclDescriptor&) const = default;

private:
    Organization organization_;
    std::int64_t component_count_;
    double iteration_time_ns_;
    std::int64_t sublibrary_count_;
    bool available_;
};

// A complete, self-contained input to the metric pipeline.
// explicit_ts_override_ns, when set, replaces the computed search time.
struct Scenario {
    DooclDescriptor doocl;
    Environment environment;
    Command command;
    Component component;
    std::optional<double> explicit_ts_override_ns;

    bool operator==(const Scenario&) const = default;
};

// ---------------------------------------------------------------------------
// Result carriers (plain data, filled by the engines).

struct CacheAccess {
    double hit_ratio = 0.0;
    double cache_time_ns = 0.0;
    double memory_time_ns = 0.0;

    bool operator==(const CacheAccess&) const = default;
};

// One pipeline stage. label is "t1".."t6". Transfer stages carry the payload
// and rate; the memory-search stage carries the cache parameters instead.
struct StageTiming {
    std::string label;
    double duration_ns = 0.0;
    std::optional<std::int64_t> bits;
    std::optional<double> rate_bpns;
    std::optional<CacheAccess> cache;

    bool operator==(const StageTiming&) const = default;
};

struct SearchCost {
    std::int64_t iterations = 0;
    double iteration_time_ns = 0.0;
    double ts_ns = 0.0;  // iterations * iteration_time_ns, single multiply

    bool operator==(const SearchCost&) const = default;
};

enum class OrganizednessLabel { Good, Average, Poor };
enum class ResponsivenessLabel { High, Low };

std::string_view to_string(OrganizednessLabel label) noexcept;
std::string_view to_string(ResponsivenessLabel label) noexcept;

struct Classification {
    OrganizednessLabel organizedness = OrganizednessLabel::Poor;
    ResponsivenessLabel responsiveness = ResponsivenessLabel::Low;

    bool operator==(const Classification&) const = default;
};

// Metric value plus every intermediate term, for auditability.
// Invariants: access_time_seconds * 1e9 equals the stage sum (within 1e-12
// relative), and availability == 0 implies dcaq == 0.
struct DcaqResult {
    double dcaq = 0.0;
    double access_time_seconds = 0.0;
    std::vector<StageTiming> access_time_breakdown;
    double access_time_ns = 0.0;  // stage sum, accumulated in index order
    double ts_ns = 0.0;           // value used in the quotient
    int availability = 0;
    std::int64_t sublibrary_count = 1;
    Classification classification{};
    SearchCost search{};          // computed organizedness, kept even when overridden
    bool ts_overridden = false;

    bool operator==(const DcaqResult&) const = default;
};

}  // namespace dcaq
