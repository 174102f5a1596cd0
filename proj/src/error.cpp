#include "gtutte/error.hpp"

namespace gtutte {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::InvalidCarrier: return "InvalidCarrier";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotRootConnected: return "NotRootConnected";
    case ErrorKind::NotOnH1: return "NotOnH1";
    case ErrorKind::AttachmentInvariantViolation: return "AttachmentInvariantViolation";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::M1NotFullRowRank: return "M1NotFullRowRank";
    case ErrorKind::ForbiddenPoint: return "ForbiddenPoint";
    case ErrorKind::POutOfRange: return "POutOfRange";
    case ErrorKind::RowsDependent: return "RowsDependent";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::OddVertexCount: return "OddVertexCount";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gtutte
