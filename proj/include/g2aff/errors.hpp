#pragma once

#include <stdexcept>
#include <string>

namespace g2aff {

// Base of every exception thrown by the library. The CLI maps any of these
// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRootError : public Error {
 public:
  using Error::Error;
};

class NonDominantWeightError : public Error {
 public:
  using Error::Error;
};

class NonPositiveRootError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class NotInPolytopeError : public Error {
 public:
  using Error::Error;
};

class NotAModuleCharacterError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Raised when two routes that must agree do not. Seeing one is a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace g2aff
