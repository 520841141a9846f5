#pragma once

#include <stdexcept>
#include <string>

namespace ufe {

// Root of every error thrown by the library. Callers that only care about
// "domain error vs. bug" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PowerOfTwoError : public Error {
 public:
  using Error::Error;
};

class EmptyArrayError : public Error {
 public:
  using Error::Error;
};

class NotInSkError : public Error {
 public:
  using Error::Error;
};

class NotASolutionError : public Error {
 public:
  using Error::Error;
};

class MoveUndefinedError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// A solution array other than the root admitted no reduction. The moves are
// complete for solutions, so seeing this means an internal inconsistency.
class IrreducibleError : public Error {
 public:
  using Error::Error;
};

class NoNontrivialSolutionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class KMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace ufe
