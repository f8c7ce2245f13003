#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mloc {

using Vertex = std::int32_t;

enum class ErrorCode {
  DimensionTooHigh,
  DuplicateVertexInSimplex,
  NegativeVertex,
  SimplexNotPresent,
  BoundExceeded,
  Disconnected,
  TooLarge,
  PreconditionNotMet,
  NotFlag,
  InvariantViolation,
  HypothesisViolation,
  NotACovering,
  NotPure,
  LinkNotSphere,
  NotASphere,
  NoFillingPair,
  SyntaxError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure the library reports goes through this type. `witness`
/// carries the offending vertices when there is a combinatorial culprit
/// (the violating 1-ball center, the non-pure simplex, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Vertex> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Vertex> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mloc
