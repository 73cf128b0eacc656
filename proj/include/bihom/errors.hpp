#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct InvariantViolation : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct InvertibilityRequired : Error {
  using Error::Error;
};
struct VarietyMismatch : Error {
  using Error::Error;
};
struct MissingModuleProduct : Error {
  using Error::Error;
};
struct WeightNotZero : Error {
  using Error::Error;
};
struct WrongWeight : Error {
  using Error::Error;
};
struct NotAMorphism : Error {
  using Error::Error;
};
struct ImageNotWellDefined : Error {
  using Error::Error;
};
struct SearchSpaceTooLarge : Error {
  using Error::Error;
};
struct UnknownName : Error {
  using Error::Error;
};
struct DSquaredViolation : Error {
  using Error::Error;
};

} // namespace bihom
