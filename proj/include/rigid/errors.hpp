#pragma once
#include <stdexcept>
#include <string>

namespace rigid {

// Malformed or inconsistent input data (bad JSON, invariant violations, ...).
// CLI maps this to exit code 2.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition of an operation fails (trivial convolution
// character, degenerate convolution, construction condition violated, ...).
// CLI maps this to exit code 3.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rigid
