// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_ERROR_HPP
#define LIFTBANK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liftbank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands come from different arithmetic modes (exact vs float).
class ModeMismatch : public Error {
public:
    ModeMismatch() : Error("arithmetic mode mismatch: exact and float values cannot be combined") {}
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A cascade violates one of its construction invariants.
class InvalidCascade : public Error {
public:
    using Error::Error;
};

/// A polyphase matrix cannot be inverted or factored as requested.
class NotUnimodular : public Error {
public:
    using Error::Error;
};

} // namespace liftbank

#endif
