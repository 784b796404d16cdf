// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#pragma once

#include <stdexcept>
#include <string>

namespace nashcone {

/// Malformed data shape: mismatched dimensions, non-square matrices,
/// duplicate names, rows of the wrong length.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed data outside an operation's domain (zero vector to
/// primitive(), singular basis, parameters with no model).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Broken internal consistency. Always a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unparseable input text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parseable input that violates the documented schema.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nashcone
