#pragma once

#include <stdexcept>
#include <string>

namespace constamax {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad profile, index out
/// of a family's range, non-prime characteristic, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic mixed elements or matrices from two different field contexts.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these means a bug or a
/// corrupted modulus table, never bad user input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

}  // namespace constamax
