#pragma once

#include <stdexcept>
#include <string>

namespace quasimix {

// Bad call arguments or values outside the supported parameter range.
struct parameter_error : std::invalid_argument {
    explicit parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Field inversion of zero.
struct division_by_zero : parameter_error {
    explicit division_by_zero(const std::string& msg) : parameter_error(msg) {}
};

// The requested computation would exceed the configured enumeration budget.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed; indicates a bug or an unsupported
// input that slipped past validation.
struct structural_error : std::logic_error {
    explicit structural_error(const std::string& msg) : std::logic_error(msg) {}
};

// A floating-point result failed an exactness integrity check.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace quasimix
