#pragma once

#include <stdexcept>
#include <string>

namespace linf {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NameError : Error {
    using Error::Error;
};

struct ParityError : Error {
    using Error::Error;
};

struct MismatchError : Error {
    using Error::Error;
};

struct DegreeError : Error {
    using Error::Error;
};

/// Raised when a computation would need data outside the configured
/// arity window or truncation degree.
struct WindowError : Error {
    using Error::Error;
};

struct InconsistentSystem : Error {
    int witness_row;
    InconsistentSystem(const std::string& msg, int row)
        : Error(msg), witness_row(row) {}
};

struct ParseError : Error {
    int line, column;
    ParseError(const std::string& msg, int l, int c)
        : Error("line " + std::to_string(l) + ", col " + std::to_string(c) +
                ": " + msg),
          line(l),
          column(c) {}
};

}  // namespace linf
