#include "dcaq/organizedness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace dcaq {

std::int64_t search_iterations(Organization organization, std::int64_t component_count) {
    if (component_count < 1) {
        throw ValidationError("component_count", "must be a positive count (>= 1)");
    }
    if (organization == Organization::UnsortedSequentialList) {
        return component_count;  // linear scan, worst case touches every entry
    }
    // ceil(log2 N) computed in integers; bit_width(N - 1) is exact where a
    // floating log2 could misround near powers of two.
    const auto n = static_cast<std::uint64_t>(component_count);
    const std::int64_t ceil_log2 = (n == 1) ? 0 : std::bit_width(n - 1);
    return std::max<std::int64_t>(std::int64_t{1}, ceil_log2);
}

SearchCost organizedness_time(Organization organization, std::int64_t component_count,
                              double iteration_time_ns) {
    if (!std::isfinite(iteration_time_ns) || !(iteration_time_ns > 0.0)) {
        throw ValidationError("iteration_time", "must be a positive time in nanoseconds");
    }
    SearchCost cost;
    cost.iterations = search_iterations(organization, component_count);
    cost.iteration_time_ns = iteration_time_ns;
    cost.ts_ns = static_cast<double>(cost.iterations) * iteration_time_ns;
    return cost;
}

}  // namespace dcaq
