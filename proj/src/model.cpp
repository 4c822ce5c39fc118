#include "dcaq/model.hpp"

#include <cmath>

namespace dcaq {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* field) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw ValidationError(field, "bit size overflows the 64-bit integer range");
    }
    return out;
}

void require_positive_count(std::int64_t value, const char* field) {
    if (value < 1) {
        throw ValidationError(field, "must be a positive count (>= 1)");
    }
}

void require_finite(double value, const char* field) {
    if (!std::isfinite(value)) {
        throw ValidationError(field, "must be a finite number");
    }
}

void require_positive_rate(double value, const char* field) {
    require_finite(value, field);
    if (!(value > 0.0)) {
        throw ValidationError(field, "must be a positive rate in bits per nanosecond");
    }
}

void require_nonnegative_time(double value, const char* field) {
    require_finite(value, field);
    if (!(value >= 0.0)) {
        throw ValidationError(field, "must be a nonnegative time in nanoseconds");
    }
}

}  // namespace

std::string_view to_string(Organization org) noexcept {
    switch (org) {
        case Organization::SortedSequentialList: return "sorted_sequential_list";
        case Organization::BalancedBinaryTree: return "balanced_binary_tree";
        case Organization::UnsortedSequentialList: return "unsorted_sequential_list";
    }
    return "unknown";
}

std::optional<Organization> organization_from_string(std::string_view text) noexcept {
    if (text == "sorted_sequential_list") return Organization::SortedSequentialList;
    if (text == "balanced_binary_tree") return Organization::BalancedBinaryTree;
    if (text == "unsorted_sequential_list") return Organization::UnsortedSequentialList;
    return std::nullopt;
}

Component::Component(std::string name, std::int64_t lines, std::int64_t chars_per_line,
                     std::int64_t bits_per_char)
    : name_(std::move(name)),
      lines_(lines),
      chars_per_line_(chars_per_line),
      bits_per_char_(bits_per_char) {
    if (name_.empty()) {
        throw ValidationError("name", "must be a non-empty identifier");
    }
    require_positive_count(lines_, "lines");
    require_positive_count(chars_per_line_, "chars_per_line");
    require_positive_count(bits_per_char_, "bits_per_char");
    bit_size_ = checked_mul(checked_mul(lines_, chars_per_line_, "lines"), bits_per_char_,
                            "bits_per_char");
}

Command::Command(std::string text, std::int64_t bits_per_char)
    : text_(std::move(text)), bits_per_char_(bits_per_char) {
    if (text_.empty()) {
        throw ValidationError("text", "must be a non-empty command string");
    }
    require_positive_count(bits_per_char_, "bits_per_char");
    bit_size_ =
        checked_mul(static_cast<std::int64_t>(text_.size()), bits_per_char_, "bits_per_char");
}

HardwareProfile::HardwareProfile(double bus_rate_bpns, double hit_ratio, double cache_time_ns,
                                 double memory_time_ns)
    : bus_rate_(bus_rate_bpns),
      hit_ratio_(hit_ratio),
      cache_time_ns_(cache_time_ns),
      memory_time_ns_(memory_time_ns) {
    require_positive_rate(bus_rate_, "bus_rate");
    require_finite(hit_ratio_, "hit_ratio");
    if (!(hit_ratio_ >= 0.0 && hit_ratio_ <= 1.0)) {
        throw ValidationError("hit_ratio", "must be within [0, 1]");
    }
    require_nonnegative_time(cache_time_ns_, "cache_time");
    require_nonnegative_time(memory_time_ns_, "memory_time");
}

NetworkProfile NetworkProfile::fixed(double rate_bpns) {
    require_positive_rate(rate_bpns, "data_rate");
    return NetworkProfile(RateKind::Fixed, rate_bpns, 0.0);
}

NetworkProfile NetworkProfile::uniform(double lo_bpns, double hi_bpns) {
    require_positive_rate(lo_bpns, "data_rate.lo");
    require_positive_rate(hi_bpns, "data_rate.hi");
    if (!(lo_bpns <= hi_bpns)) {
        throw ValidationError("data_rate", "uniform bounds require lo <= hi");
    }
    return NetworkProfile(RateKind::Uniform, lo_bpns, hi_bpns);
}

NetworkProfile NetworkProfile::normal(double mean_bpns, double stddev_bpns) {
    require_finite(mean_bpns, "data_rate.mean");
    require_finite(stddev_bpns, "data_rate.stddev");
    if (!(stddev_bpns >= 0.0)) {
        throw ValidationError("data_rate.stddev", "must be nonnegative");
    }
    if (stddev_bpns == 0.0 && !(mean_bpns > 0.0)) {
        throw ValidationError("data_rate", "degenerate normal needs a positive mean");
    }
    return NetworkProfile(RateKind::Normal, mean_bpns, stddev_bpns);
}

double NetworkProfile::fixed_rate() const {
    if (kind_ != RateKind::Fixed) throw Error("network profile is not a fixed rate");
    return a_;
}

double NetworkProfile::uniform_lo() const {
    if (kind_ != RateKind::Uniform) throw Error("network profile is not uniform");
    return a_;
}

double NetworkProfile::uniform_hi() const {
    if (kind_ != RateKind::Uniform) throw Error("network profile is not uniform");
    return b_;
}

double NetworkProfile::normal_mean() const {
    if (kind_ != RateKind::Normal) throw Error("network profile is not normal");
    return a_;
}

double NetworkProfile::normal_stddev() const {
    if (kind_ != RateKind::Normal) throw Error("network profile is not normal");
    return b_;
}

bool is_remote(const Environment& env) noexcept {
    return std::holds_alternative<RemoteEnvironment>(env);
}

const HardwareProfile& client_profile(const Environment& env) noexcept {
    if (const auto* local = std::get_if<LocalEnvironment>(&env)) {
        return local->client;
    }
    return std::get<RemoteEnvironment>(env).client;
}

DooclDescriptor::DooclDescriptor(Organization organization, std::int64_t component_count,
                                 double iteration_time_ns, std::int64_t sublibrary_count,
                                 bool available)
    : organization_(organization),
      component_count_(component_count),
      iteration_time_ns_(iteration_time_ns),
      sublibrary_count_(sublibrary_count),
      available_(available) {
    require_positive_count(component_count_, "component_count");
    require_positive_count(sublibrary_count_, "sublibrary_count");
    require_finite(iteration_time_ns_, "iteration_time");
    if (!(iteration_time_ns_ > 0.0)) {
        throw ValidationError("iteration_time", "must be a positive time in nanoseconds");
    }
}

std::string_view to_string(OrganizednessLabel label) noexcept {
    switch (label) {
        case OrganizednessLabel::Good: return "good";
        case OrganizednessLabel::Average: return "average";
        case OrganizednessLabel::Poor: return "poor";
    }
    return "unknown";
}

std::string_view to_string(ResponsivenessLabel label) noexcept {
    switch (label) {
        case ResponsivenessLabel::High: return "high";
        case ResponsivenessLabel::Low: return "low";
    }
    return "unknown";
}

}  // namespace dcaq
