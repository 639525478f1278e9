#pragma once

#include <stdexcept>
#include <string>

namespace cmtk {

// Bad input: malformed files, violated preconditions, caps exceeded. CLI exit code 1.
struct user_error : std::runtime_error {
    explicit user_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent routes to the same answer disagreed, or a theorem the tool
// relies on was contradicted by a computation. Always a bug or a falsified
// expectation, never bad input. CLI exit code 2.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cmtk
