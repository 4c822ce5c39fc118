#pragma once

#include <filesystem>
#include <string>

#include "dcaq/model.hpp"

// Scenario documents: JSON files whose field names mirror the model types.
// Rates are numbers in bits/ns or strings with an explicit unit suffix
// ("50 Mbps", "0.1 bpns", "0.1 bits/ns"); 1 Mbps = 1e-3 bits/ns. Times are
// nanoseconds. parse(render(s)) reproduces s exactly.

namespace dcaq {

Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario_file(const std::filesystem::path& path);

// Canonical rendering: rates as numbers in bits/ns, fixed key order.
std::string render_scenario(const Scenario& scenario);

}  // namespace dcaq
