#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conwaykit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VariableCollision : Error {
  explicit VariableCollision(unsigned j)
      : Error("variable a" + std::to_string(j) + " would appear twice in a monomial"), var(j) {}
  unsigned var;
};

struct MissingAssignment : Error {
  explicit MissingAssignment(unsigned j)
      : Error("no value assigned to a" + std::to_string(j)), var(j) {}
  unsigned var;
};

struct EmptySequence : Error {
  EmptySequence() : Error("empty sequence") {}
};

struct NotReduced : Error {
  using Error::Error;
};

struct ImproperFraction : Error {
  using Error::Error;
};

struct InvalidEntry : Error {
  using Error::Error;
};

struct ColorMismatch : Error {
  using Error::Error;
};

struct NotLinear : Error {
  using Error::Error;
};

struct NonPlanar : Error {
  using Error::Error;
};

struct DataError : Error {
  using Error::Error;
};

struct CensusMismatch : DataError {
  using DataError::DataError;
};

// position is 1-based; its unit (character, token, line) depends on the parser
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos, std::string unit = "column")
      : Error(what + " at " + unit + " " + std::to_string(pos)), position(pos), unit(std::move(unit)) {}
  std::size_t position;
  std::string unit;
};

}  // namespace conwaykit
