#pragma once

#include <stdexcept>
#include <string>

namespace nonvanish {

// Base of all library errors. The CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Division by zero and similar arithmetic faults.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// An internal self-check failed; indicates a bug, not bad input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A search would exceed the configured enumeration budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace nonvanish
