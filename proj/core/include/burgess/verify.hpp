#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burgess {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full fixed acceptance battery. Deterministic given the seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0x5eed5eedULL);

} // namespace burgess
