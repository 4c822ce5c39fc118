#pragma once

#include <cmath>
#include <string>

#include "dcaq/model.hpp"

namespace dcaq::test {

inline bool rel_close(double actual, double expected, double tol = 1e-12) {
    if (expected == 0.0) return actual == 0.0;
    return std::abs(actual - expected) <= tol * std::abs(expected);
}

inline bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Local desktop scenario: 64-bit command, 4096-bit component, bus 0.05 b/ns,
// hit ratio 0.9, cache 20 ns, memory 100 ns, sorted list of 16, 5 sublibraries.
inline Scenario desktop_scenario() {
    return Scenario{
        DooclDescriptor(Organization::SortedSequentialList, 16, 0.3, 5, true),
        LocalEnvironment{HardwareProfile(0.05, 0.9, 20.0, 100.0)},
        Command("retrcomp", 8),
        Component("C", 16, 32, 8),
        std::nullopt,
    };
}

// Remote LAN scenario: 128-bit command, 4096-bit component, client bus 0.05,
// server bus 0.2, network 0.1 b/ns, server cache (0.92, 10, 90), balanced
// tree of 4, 100 sublibraries, declared search-time override of 3 ns.
inline Scenario lan_scenario(bool with_override = true) {
    return Scenario{
        DooclDescriptor(Organization::BalancedBinaryTree, 4, 0.15, 100, true),
        RemoteEnvironment{HardwareProfile(0.05, 0.9, 20.0, 100.0),
                          HardwareProfile(0.2, 0.92, 10.0, 90.0), NetworkProfile::fixed(0.1)},
        Command("retrievecompsrvr", 8),
        Component("C", 16, 32, 8),
        with_override ? std::optional<double>(3.0) : std::nullopt,
    };
}

}  // namespace dcaq::test
