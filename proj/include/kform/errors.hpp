#pragma once

#include <stdexcept>
#include <string>

namespace kform {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value that must be a rational integer is not one; always indicates an
// invalid table or a bug, never a rounding artifact.
struct NotAnInteger : Error {
    using Error::Error;
};

struct NonGenuineInput : Error {
    using Error::Error;
};

struct MalformedTable : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct TableMismatch : Error {
    using Error::Error;
};

struct NotFreeAction : Error {
    std::string witness_class;
    NotFreeAction(const std::string& msg, std::string witness)
        : Error(msg), witness_class(std::move(witness)) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg), position(pos) {}
};

struct UnknownName : Error {
    std::string name;
    UnknownName(const std::string& msg, std::string n)
        : Error(msg), name(std::move(n)) {}
};

struct InternalInconsistency : Error {
    using Error::Error;
};

}  // namespace kform
