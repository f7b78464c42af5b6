#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cblock/partition.hpp"

namespace cblock {

struct CriterionResult {
    int id = 0;
    std::string tag;
    std::string name;
    bool passed = false;
    std::string details;
};

// Runs every acceptance criterion (optionally filtered by tag substring).
// All checks are exact; a criterion passes only when every subcheck holds
// with zero tolerance.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::string& only = "");

// Weakly decreasing non-negative tuples with lambda_1 >= 1, length in
// [min_m, max_m], size in [1, max_size]. Trailing zero parts are kept:
// they change m and therefore the tensor setup.
std::vector<Partition> all_partitions(int min_m, int max_m, int max_size);

} // namespace cblock
