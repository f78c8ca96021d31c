#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hess::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double elapsed_ms = 0.0;
    double budget_ms = 0.0;
    std::string detail;
};

// Runs one numbered check (1..11); pass requires both the exact verdict and
// staying inside the wall-clock budget.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();
std::vector<CriterionResult> run_selected(const std::vector<int>& ids);

bool all_pass(const std::vector<CriterionResult>& results);
void print_results(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace hess::selftest
