#pragma once

#include <stdexcept>
#include <string>

namespace spinvar {

// Malformed or out-of-range input (files, directions, quantum numbers).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A state failed its own invariants (normalization, Hermiticity, positivity).
struct state_error : std::runtime_error {
    explicit state_error(const std::string& what) : std::runtime_error(what) {}
};

// A quantity that is a theorem came out violated; signals a numerical fault
// upstream, never a property of the input.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spinvar
