#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gtutte {

enum class ErrorKind {
  // exact algebra
  SingularMatrix,
  NotSquare,
  DimensionMismatch,
  DuplicateNode,
  DivisionByZero,
  // greedoids and carriers
  ElementOutOfRange,
  GroundSetTooLarge,
  InvalidCarrier,
  NotConnected,
  NotRootConnected,
  // tutte engine
  NotOnH1,
  // constructions
  AttachmentInvariantViolation,
  DenominatorVanishes,
  M1NotFullRowRank,
  // reductions
  ForbiddenPoint,
  POutOfRange,
  RowsDependent,
  // basis counting
  NotSimple,
  NotABasis,
  OddVertexCount,
  // front end
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gtutte
