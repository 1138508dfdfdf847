#pragma once

#include <stdexcept>
#include <string>

namespace pgg {

// Invariant or precondition violation in library use.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file or text format.
struct ParseError : Error {
    using Error::Error;
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what) {}
};

} // namespace pgg
