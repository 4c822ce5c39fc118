#include "dcaq/access_time.hpp"

#include <cmath>
#include <utility>

namespace dcaq {

namespace {

StageTiming transfer_stage(const char* label, std::int64_t bits, double rate_bpns) {
    StageTiming stage;
    stage.label = label;
    stage.duration_ns = transfer_time_ns(bits, rate_bpns);
    stage.bits = bits;
    stage.rate_bpns = rate_bpns;
    return stage;
}

StageTiming memory_search_stage(const char* label, const HardwareProfile& hw) {
    StageTiming stage;
    stage.label = label;
    stage.duration_ns =
        cache_effective_time_ns(hw.hit_ratio(), hw.cache_time_ns(), hw.memory_time_ns());
    stage.cache = CacheAccess{hw.hit_ratio(), hw.cache_time_ns(), hw.memory_time_ns()};
    return stage;
}

}  // namespace

AccessTimeBreakdown::AccessTimeBreakdown(std::vector<StageTiming> stages)
    : stages_(std::move(stages)), total_ns_(0.0) {
    if (stages_.size() != 3 && stages_.size() != 6) {
        throw Error("access-time breakdown must have 3 (local) or 6 (remote) stages");
    }
    for (const StageTiming& stage : stages_) {
        total_ns_ += stage.duration_ns;
    }
}

double transfer_time_ns(std::int64_t bits, double rate_bpns) {
    if (bits < 0) {
        throw ValidationError("bits", "payload size must be nonnegative");
    }
    if (!std::isfinite(rate_bpns) || !(rate_bpns > 0.0)) {
        throw ValidationError("rate", "transfer rate must be a positive, finite value");
    }
    return static_cast<double>(bits) / rate_bpns;
}

double cache_effective_time_ns(double hit_ratio, double cache_time_ns, double memory_time_ns) {
    if (!std::isfinite(hit_ratio) || !(hit_ratio >= 0.0 && hit_ratio <= 1.0)) {
        throw ValidationError("hit_ratio", "must be within [0, 1]");
    }
    if (!std::isfinite(cache_time_ns) || !(cache_time_ns >= 0.0) ||
        !std::isfinite(memory_time_ns) || !(memory_time_ns >= 0.0)) {
        throw ValidationError("cache_time", "access times must be nonnegative and finite");
    }
    return hit_ratio * cache_time_ns + (1.0 - hit_ratio) * (cache_time_ns + memory_time_ns);
}

AccessTimeBreakdown local_access_time(const Command& command, const Component& component,
                                      const HardwareProfile& hw) {
    std::vector<StageTiming> stages;
    stages.reserve(3);
    stages.push_back(transfer_stage("t1", command.bit_size(), hw.bus_rate()));
    stages.push_back(memory_search_stage("t2", hw));
    stages.push_back(transfer_stage("t3", component.bit_size(), hw.bus_rate()));
    return AccessTimeBreakdown(std::move(stages));
}

AccessTimeBreakdown remote_access_time(const Command& command, const Component& component,
                                       const HardwareProfile& client,
                                       const HardwareProfile& server,
                                       double network_rate_bpns) {
    std::vector<StageTiming> stages;
    stages.reserve(6);
    stages.push_back(transfer_stage("t1", command.bit_size(), client.bus_rate()));
    stages.push_back(transfer_stage("t2", command.bit_size(), network_rate_bpns));
    stages.push_back(memory_search_stage("t3", server));
    stages.push_back(transfer_stage("t4", component.bit_size(), server.bus_rate()));
    stages.push_back(transfer_stage("t5", component.bit_size(), network_rate_bpns));
    stages.push_back(transfer_stage("t6", component.bit_size(), client.bus_rate()));
    return AccessTimeBreakdown(std::move(stages));
}

}  // namespace dcaq
