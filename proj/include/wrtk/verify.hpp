#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wrtk {

struct CheckResult {
    std::string group;
    std::string name;   // what is being checked, with the formula or example it pins down
    bool pass = false;
    std::string detail; // worst deviation or the first mismatch
};

// Golden-example and identity suites behind `wrtk verify`.
// Groups: index-sets, bijections, gauss, lemmas, dual-a, classification, torsion-cs.
std::vector<CheckResult> run_verification(const std::string& only_group, std::uint64_t seed);

} // namespace wrtk
