#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace veer {

enum class ErrorCode {
  // algebra
  NotPrimitive,
  FieldMismatch,
  NotInvertible,
  // track
  IncompleteTrack,
  IllegalRegion,
  SwitchViolation,
  NonpositiveWeight,
  NotFullyPunctured,
  NotHyperbolic,
  // moves
  NotLarge,
  NotSmall,
  NotMixed,
  NotFoldable,
  CentralSplit,
  CentralSplitInBatch,
  // taut
  SelfAdjacentEdge,
  ClosingMismatch,
  NotTaut,
  VeeringRequired,
  DegenerateSystem,
  // bounds
  BoundViolated,
  BadParameters,
  // cli
  NotPseudoAnosov,
  NoPeriod,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. The CLI maps these to
/// exit status 1 (and Parse to 2).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace veer
