#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latflow {

enum class ErrorCode {
  IndexOutOfRange,
  ReflexivePair,
  CycleDetected,
  RedundantCover,
  NotAPoset,
  NotALattice,
  Unbounded,
  LengthMismatch,
  LatticeMismatch,
  EntryHasPredecessor,
  ExitHasSuccessor,
  NotUniqueEntry,
  NotUniqueExit,
  UnreachableVertex,
  NotAPath,
  NonMonotoneFunction,
  IterationBoundExceeded,
  InstanceTooLarge,
  NoFixedPoint,
  NoMaximum,
  BadIndegree,
  NoUniqueOutput,
  AssignmentMismatch,
  GenerationFailed,
  SyntaxError,
  SchemaError,
};

std::string_view error_code_name(ErrorCode code);

// All validation and solver failures surface as Error. `detail` carries the
// offending index where one exists (vertex, element, ...), -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int detail = -1)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  int detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  int detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message, int detail = -1) {
  throw Error(code, message, detail);
}

}  // namespace latflow
