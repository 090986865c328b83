#pragma once

#include <stdexcept>
#include <string>

namespace icc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graph files, message files, code JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

/// An exact solver was asked to run above its size cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, int size, int cap)
        : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
          size_(size), cap_(cap) {}

    int size() const noexcept { return size_; }
    int cap() const noexcept { return cap_; }

private:
    int size_;
    int cap_;
};

/// Argument outside an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Linear system over the field has no unique solution.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// A result failed one of its own consistency checks. Indicates a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace icc
