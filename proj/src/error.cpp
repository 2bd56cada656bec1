#include "specind/error.hpp"

namespace specind {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::InvalidFamilyParameters: return "InvalidFamilyParameters";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::GroupingAmbiguity: return "GroupingAmbiguity";
    case ErrorKind::NoClosedForm: return "NoClosedForm";
    case ErrorKind::DegenerateInnerProduct: return "DegenerateInnerProduct";
    case ErrorKind::UnsupportedK: return "UnsupportedK";
    case ErrorKind::MissingAux: return "MissingAux";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NormalizationViolation: return "NormalizationViolation";
    case ErrorKind::NumericalInstability: return "NumericalInstability";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotPWR: return "NotPWR";
    case ErrorKind::NotWalkRegular: return "NotWalkRegular";
    case ErrorKind::DegeneratePolynomial: return "DegeneratePolynomial";
    case ErrorKind::TraceNotZero: return "TraceNotZero";
    case ErrorKind::BadNormalization: return "BadNormalization";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NoValidTheta: return "NoValidTheta";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotSRG: return "NotSRG";
    case ErrorKind::UnknownTable: return "UnknownTable";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace specind
