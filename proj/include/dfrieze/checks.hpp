#pragma once

/**
 * @file checks.hpp
 * @brief Validation suite run by `dfrieze check`: each entry cross-checks one
 * claim (recursion against formula, formula against mutation, identities).
 */

#include "dfrieze/frieze.hpp"
#include "dfrieze/quiver.hpp"

#include <string>
#include <vector>

namespace dfrieze {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckOptions {
    int determinant_trials = 500;
    unsigned random_seed = 1;
    std::size_t max_seeds = 200000;  ///< mutation closure budget
};

/// All checks for one canonical seed of type A or D. Engine errors inside a
/// check turn into a failure of that check; BudgetExceeded propagates.
std::vector<CheckResult> run_checks(const Seed& seed, const DynkinClass& type, const CheckOptions& options);

/// Determinant identities behind the matrix formula, on randomized words.
CheckResult determinant_check(int trials, unsigned random_seed);

/// Frieze relation on a stored array, e.g. one read from a fixture file.
CheckResult frieze_relation_check(const FriezeArray& f);

/// Merges per-orientation results by name: passes if every run passed.
std::vector<CheckResult> merge_results(const std::vector<std::vector<CheckResult>>& runs);

}  // namespace dfrieze
