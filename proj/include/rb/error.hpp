#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rb {

enum class ErrorKind {
  SingularMatrix,
  DimensionMismatch,
  FieldMismatch,
  NotABimodule,
  NotARBRepresentation,
  NotAMatchedPair,
  NotABialgebra,
  NotQAdmissible,
  NotAntisymmetric,
  NotWeightZero,
  NotDendriform,
  NotInvertible,
  LiftPreconditionFailed,
  ParseError,
  ResolutionError,
  UnknownCheck,
  KindMismatch,
  BudgetExceeded,
  InvalidArgument,
  // Two independent routes to the same verdict disagreed.
  Inconsistent,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rb
