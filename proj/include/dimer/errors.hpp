#pragma once

#include <stdexcept>

namespace dimer {

// Input that failed to parse: malformed decimal, JSON/CSV syntax, schema.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Work refused because it would exceed a configured resource budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dimer
