#pragma once

#include <string>
#include <vector>

namespace seltrace {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double bound = 0.0;
    bool passed = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    int cases() const { return int(checks.size()); }
    int passed() const;
    int failed() const { return cases() - passed(); }
    double max_residual() const;
    bool ok() const { return failed() == 0; }
};

// Registered suites, in acceptance order.
std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
SuiteReport run_suite(const std::string& name);

}  // namespace seltrace
