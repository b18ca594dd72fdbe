#ifndef ACT_ERRORS_HPP
#define ACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace act {

// Caller passed structurally wrong arguments (dimension mismatch, bad index).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A stated precondition does not hold for otherwise well-formed input
// (null vector where a non-null one is required, unsatisfiable cone, ...).
struct precondition_error : std::domain_error {
    explicit precondition_error(const std::string& msg) : std::domain_error(msg) {}
};

// Malformed external input (files, constructor specs).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; indicates a library bug, never user error.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace act

#endif
