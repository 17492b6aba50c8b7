#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace faulhaber {

enum class Suite { tables, invariants, riddle, gf, all };

/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct CheckResult {
    unsigned criterion = 0; // 1..13
    std::string title;
    bool pass = false;
    std::string detail; // first mismatch, empty on success
    std::string note;   // corrected misprints in the reference tables
};

/// The criteria in suite order. Deterministic; random inputs use fixed seeds.
std::vector<unsigned> suite_criteria(Suite s);

CheckResult run_criterion(unsigned criterion);

std::vector<CheckResult> run_suite(Suite s);

} // namespace faulhaber
