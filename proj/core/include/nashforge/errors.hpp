#pragma once

#include <stdexcept>
#include <string>

namespace nashforge {

// Input text could not be parsed or failed structural validation.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A coefficient does not exist in the requested field (e.g. 1/2 in characteristic 2).
struct FieldMismatchError : std::runtime_error {
    explicit FieldMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

// The request is outside the certified scope of the implemented criteria.
// Carries a human-readable witness of the failed hypothesis when one exists.
struct UnsupportedScopeError : std::runtime_error {
    explicit UnsupportedScopeError(const std::string& msg, std::string witness_ = "")
        : std::runtime_error(msg), witness(std::move(witness_)) {}
    std::string witness;
};

// The reduction-step budget was exhausted before the computation finished.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nashforge
