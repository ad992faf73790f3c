#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geoconn {

// Malformed textual input: grammar violations, unknown variables, bad literals.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), pos_(position) {}

    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

// Semantically invalid arguments: context mismatches, inhomogeneous input,
// division by zero, degree mismatches.
class value_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured search or iteration budget ran out (hsop trials, t limit).
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A broken internal invariant; indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace geoconn
