#pragma once

#include <stdexcept>
#include <string>

namespace ptk {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: unknown state or letter, name clash, bad document.
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain of definition
/// (e.g. confluence on a non-total automaton).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured budget (states, depth search, arithmetic range) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// The language does not belong to the class required by the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree did not. Indicates a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace ptk
