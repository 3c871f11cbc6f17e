#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glt {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shape or index mismatch between matrices / tables.
struct DimensionError : Error {
    using Error::Error;
};

/// Argument outside the declared domain of a function or operation.
struct DomainError : Error {
    using Error::Error;
};

/// Non-finite or otherwise invalid numeric result (singular evaluation,
/// NaN/Inf entries rejected by constructors).
struct NumericError : Error {
    using Error::Error;
};

/// Iterative solver failed to reach its tolerance within the iteration cap.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Expression text failed to parse; `position` is a 0-based byte offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Run-configuration problem; `line` is 1-based, 0 when not tied to a line.
struct ConfigError : Error {
    std::size_t line;
    ConfigError(const std::string& msg, std::size_t line_no = 0)
        : Error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg), line(line_no) {}
};

/// File could not be read or written.
struct IoError : Error {
    using Error::Error;
};

}  // namespace glt
