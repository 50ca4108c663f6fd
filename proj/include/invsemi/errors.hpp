#pragma once

#include <stdexcept>
#include <string>

namespace invsemi {

  // Base class of every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Operands live on different ground sets (degree or index-set mismatch).
  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  // An argument is well formed but outside the domain of the operation,
  // e.g. a map that is not a member of the required semigroup.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // Invalid argument values (empty generating set, threshold out of range).
  class ArgumentError : public Error {
   public:
    using Error::Error;
  };

  // Malformed text input.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // The requested computation exceeds a configured budget.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

}  // namespace invsemi
