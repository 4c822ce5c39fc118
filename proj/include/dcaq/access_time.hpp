#pragma once

#include <cstdint>
#include <vector>

#include "dcaq/model.hpp"

// Analytic component access time with a per-stage breakdown.
// Local path: t1 command over client bus, t2 memory search, t3 component to
// display. Remote path: t1 command over client bus, t2 command over network,
// t3 memory search at the server, t4 component to the server NIC, t5
// component over the network, t6 component to the client display.
// Stage durations are summed in index order so totals are bit-reproducible.

namespace dcaq {

class AccessTimeBreakdown {
public:
    // Stages must be 3 (local) or 6 (remote); the total is accumulated in
    // index order at construction.
    explicit AccessTimeBreakdown(std::vector<StageTiming> stages);

    const std::vector<StageTiming>& stages() const noexcept { return stages_; }
    double total_ns() const noexcept { return total_ns_; }
    bool is_local() const noexcept { return stages_.size() == 3; }

    bool operator==(const AccessTimeBreakdown&) const = default;

private:
    std::vector<StageTiming> stages_;
    double total_ns_;
};

// bits / rate, in nanoseconds. Throws ValidationError on rate <= 0.
double transfer_time_ns(std::int64_t bits, double rate_bpns);

// hr * t_c + (1 - hr) * (t_c + t_m). Throws ValidationError on hr outside [0, 1].
double cache_effective_time_ns(double hit_ratio, double cache_time_ns, double memory_time_ns);

AccessTimeBreakdown local_access_time(const Command& command, const Component& component,
                                      const HardwareProfile& hw);

AccessTimeBreakdown remote_access_time(const Command& command, const Component& component,
                                       const HardwareProfile& client,
                                       const HardwareProfile& server,
                                       double network_rate_bpns);

}  // namespace dcaq
