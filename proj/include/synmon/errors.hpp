#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synmon {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a regex or inequality, with the offending position.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}

    std::size_t position;
};

/// A configurable size cap (states, monoid elements, family members) was hit.
class cap_error : public error {
public:
    using error::error;
};

} // namespace synmon
