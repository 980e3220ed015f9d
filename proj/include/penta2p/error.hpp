#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace penta2p {

enum class ErrorCode {
  OutOfRange,
  LoopEdge,
  FullRemoval,
  NonPositiveK,
  InvalidMap,
  NotTwoConnected,
  NotThreeConnected,
  TooSmall,
  BadGadget,
  NotPentagulation,
  DuplicateEdge,
  SameEndpoints,
  EndpointStellating,
  AdjacentStellating,
  MissingEdge,
  GirthTooSmall,
  SearchExhausted,
  Indeterminate,
  BadCut,
  InvalidWitness,
  UnsupportedFormat,
  TheoremViolation,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace penta2p
