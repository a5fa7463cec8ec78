#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gvm {

// Input text that does not match a grammar (group specs, graph DSL,
// construct expressions, edge-list files).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what,
                         std::size_t position = std::string::npos)
        : std::runtime_error(what), position(position) {}
    std::size_t position;
};

// Structurally invalid input for an operation: isolated vertices fed to a
// solver, arity mismatches, non-units, labelings that violate a precondition.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The search space exceeds the caller-supplied budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside the range a closed form covers; callers should fall
// back to one of the search-based solvers.
struct not_covered_error : domain_error {
    using domain_error::domain_error;
};

}  // namespace gvm
