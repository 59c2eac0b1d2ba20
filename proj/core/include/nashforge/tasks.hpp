#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nashforge/report.hpp"
#include "nashforge/variety.hpp"

namespace nashforge {

struct TaskOptions {
    std::string kind;
    int order = 0;   // 0: the file's [task] order, else the per-task default
    int cutoff = 0;  // jet cutoff; 0: the file's value, else the engine default
    bool verify = false;
    long budget = 0;  // reduction-step budget; 0: keep the engine default
};

// Task names accepted by run_task and the CLI, in documentation order.
const std::vector<std::string>& task_kinds();

// A cross-oracle disagreement found by --verify. Deliberately not one of the
// scoped/budget errors: it means two independent routes computed different
// answers, which is an engine defect, not an input problem.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dispatches one task against a parsed input and assembles the report.
// Scope refusals (UnsupportedScopeError), budget exhaustion
// (BudgetExceededError) and input problems (std::invalid_argument) propagate
// to the caller, which owns the exit-code mapping.
Report run_task(const VarietyInput& in, const TaskOptions& opt);

}  // namespace nashforge
