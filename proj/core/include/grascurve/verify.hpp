#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grascurve/field.hpp"

namespace grascurve {

struct VerifyOptions {
    std::uint64_t seed = 0;
    unsigned long long budget = 100000000ULL;
    int jobs = 1;
    std::optional<std::vector<Rat>> y2_fourth;  // override for the Y2 preset
};

struct CheckResult {
    std::string id;
    std::string description;
    std::string status;    // "pass" | "fail" | "skipped"
    std::string evidence;  // counts, dimensions, splitting types, or failure detail
};

// Stable list of check ids, in report order.
const std::vector<std::string>& verify_check_ids();

// Runs one named check; throws ParseError on unknown id.
CheckResult run_check(const std::string& id, const VerifyOptions& opts);

std::vector<CheckResult> run_all_checks(const VerifyOptions& opts);

}  // namespace grascurve
