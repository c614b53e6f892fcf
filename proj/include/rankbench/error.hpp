#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankbench {

enum class ErrorKind {
  ShapeMismatch,
  BadValue,
  EmptyMatrix,
  LengthMismatch,
  WeightInvalid,
  NonPositiveSigma,
  NonPositiveSigmaFloor,
  TooFewAlgorithms,
  TooFewBenchmarks,
  AllZeroDifferences,
  BadGrid,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every validation failure in the library surfaces as a RankError. The kind
// is stable and machine-readable; the message is for humans.
class RankError : public std::runtime_error {
 public:
  RankError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rankbench
