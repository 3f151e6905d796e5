#pragma once

#include <stdexcept>
#include <string>

namespace pdnf {

enum class ErrorKind {
    DimensionMismatch,
    InvalidArgument,
    AxisOutOfRange,
    DegreeZeroForm,
    NotClosed,
    NonVanishingAtOrigin,
    SingularMatrix,
    SpectrumNotInField,
    NotDiagonalized,
    InvalidGenerator,
    NotIsochore,
    NotCommuting,
    InvalidWitness,
    CountMismatch,
    SyntaxError,
    UnknownIdentifier,
    InternalFault,
};

const char* to_string(ErrorKind kind);

// Single exception type for the engine; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Parser failures carry a 1-based source location.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, int line, int column, const std::string& what)
        : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace pdnf
