#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mrkit {

enum class ErrorKind {
  IndexOutOfRange,
  DeltaUndefined,
  MalformedTable,
  AxiomViolation,
  CapExceeded,
  NotClosed,
  NotAFilter,
  NotSubfilter,
  NoWitnessFilter,
  NotBoolean,
  NotGFilter,
  NoDecomposition,
  NotAPresentation,
  CaretUndefined,
  MembershipBroken,
  NotUpwardClosed,
  NotInner,
  SplitFailure,
  NotSim,
  NoSuchPair,
  NotMR,
  Schema,
  Usage,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mrkit
