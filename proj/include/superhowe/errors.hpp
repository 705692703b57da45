#pragma once

#include <stdexcept>
#include <string>

namespace howe {

// Thrown when two polynomials over different variable tables are combined.
struct TableMismatchError : std::invalid_argument {
    explicit TableMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Exact division failed; signals a construction bug upstream.
struct NotDivisibleError : std::runtime_error {
    explicit NotDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

// Division by a polynomial containing odd variables is unsupported.
struct OddDivisorError : std::invalid_argument {
    explicit OddDivisorError(const std::string& what) : std::invalid_argument(what) {}
};

// A Cartan operator did not act by a scalar on the given vector.
struct NotAWeightVectorError : std::runtime_error {
    explicit NotAWeightVectorError(const std::string& what) : std::runtime_error(what) {}
};

// Partition violates the hook condition required by the requested module.
struct HookViolationError : std::invalid_argument {
    explicit HookViolationError(const std::string& what) : std::invalid_argument(what) {}
};

// A purified vector still contains auxiliary variables; sign bookkeeping fault.
struct AuxiliaryResidueError : std::runtime_error {
    explicit AuxiliaryResidueError(const std::string& what) : std::runtime_error(what) {}
};

// Skew shape lambda/mu with mu not contained in lambda.
struct NotContainedError : std::invalid_argument {
    explicit NotContainedError(const std::string& what) : std::invalid_argument(what) {}
};

// A check exceeded the configured term-count ceiling.
struct OverBudgetError : std::runtime_error {
    explicit OverBudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Process-wide term-count ceiling for a single polynomial.  Reads the
// SUPERHOWE_BUDGET environment variable once; settable for tests and the CLI.
std::size_t term_budget();
void set_term_budget(std::size_t terms);

}  // namespace howe
