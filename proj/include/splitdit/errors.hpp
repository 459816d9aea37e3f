#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splitdit {

enum class ErrorKind {
  IndexOutOfRange,
  DuplicateTriple,
  UnknownNode,
  SchemaError,
  CacheMiss,
  Transport,
  AuthMissing,
  UnparseableResponse,
  GrammarError,
  ArityMismatch,
  ShapeMismatch,
  InconsistentTraces,
  NoConvergence,
  DegenerateAxis,
  TooFewSteps,
  OrderingViolation,
  DimMismatch,
  MixedKinds,
  EmptyGroup,
  EmptyText,
  EmptyPrimitives,
  EmptySpan,
  NonFiniteLatent,
  NonFiniteLoss,
  MissingArtifact,
  InvalidConfig,
};

const char* error_kind_name(ErrorKind kind);

/// Library-wide exception. `index` carries a kind-specific location:
/// byte offset for GrammarError, step index for NonFiniteLatent/NonFiniteLoss.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, const std::string& message, std::size_t index = kNoIndex)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind),
        index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::size_t index_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message,
                               std::size_t index = Error::kNoIndex) {
  throw Error(kind, message, index);
}

}  // namespace splitdit
