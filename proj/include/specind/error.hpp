#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specind {

enum class ErrorKind {
  MalformedGraph6,
  MalformedEdgeList,
  DisconnectedGraph,
  InvalidFamilyParameters,
  InvalidArgument,
  EigenFailure,
  GroupingAmbiguity,
  NoClosedForm,
  DegenerateInnerProduct,
  UnsupportedK,
  MissingAux,
  Infeasible,
  Unbounded,
  NormalizationViolation,
  NumericalInstability,
  NotRegular,
  NotPWR,
  NotWalkRegular,
  DegeneratePolynomial,
  TraceNotZero,
  BadNormalization,
  DivisionByZero,
  NoValidTheta,
  SizeLimitExceeded,
  Timeout,
  NegativeRadicand,
  NotApplicable,
  NotSRG,
  UnknownTable,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace specind
