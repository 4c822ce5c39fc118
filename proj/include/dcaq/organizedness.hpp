#pragma once

#include <cstdint>

#include "dcaq/model.hpp"

// Search-cost term of the metric: iteration count from the library's data
// structure and size, times the per-iteration cost.

namespace dcaq {

// Worst-case search steps for a library of component_count entries.
// Binary-search organizations (sorted list, balanced tree) take
// max(1, ceil(log2 N)) steps; an unsorted list takes N.
std::int64_t search_iterations(Organization organization, std::int64_t component_count);

SearchCost organizedness_time(Organization organization, std::int64_t component_count,
                              double iteration_time_ns);

}  // namespace dcaq
