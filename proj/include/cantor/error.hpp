#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

/// Base of every error raised by the library. The CLI maps subclasses to
/// exit codes: validation-type errors to 2, inconclusive/budget to 3.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A query needs more resolution than the object carries.
class ResolutionError : public Error {
public:
  ResolutionError(const std::string& what, int needed)
      : Error(what), needed_resolution(needed) {}
  int needed_resolution;
};

/// Enclosures overlap, so a certified comparison could not be decided.
class Inconclusive : public Error {
public:
  using Error::Error;
};

class BudgetError : public Error {
public:
  using Error::Error;
};

class CapacityError : public Error {
public:
  using Error::Error;
};

class InfeasibleError : public Error {
public:
  using Error::Error;
};

}  // namespace cantor
