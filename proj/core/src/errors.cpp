#include "reembed/errors.hpp"

namespace reembed {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::NotSeparating: return "NOT_SEPARATING";
    case ErrorCode::NoSeparatingInDegree: return "NO_SEPARATING_IN_DEGREE";
    case ErrorCode::NotUnimodular: return "NOT_UNIMODULAR";
    case ErrorCode::QsIncomplete: return "QS_INCOMPLETE";
    case ErrorCode::RowspaceNotFreeBasis: return "ROWSPACE_NOT_FREE_BASIS";
    case ErrorCode::VerificationFailed: return "VERIFICATION_FAILED";
  }
  return "UNKNOWN";
}

}  // namespace reembed
