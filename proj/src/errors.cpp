#include "splitdit/errors.hpp"

namespace splitdit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateTriple: return "DuplicateTriple";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::CacheMiss: return "CacheMiss";
    case ErrorKind::Transport: return "Transport";
    case ErrorKind::AuthMissing: return "AuthMissing";
    case ErrorKind::UnparseableResponse: return "UnparseableResponse";
    case ErrorKind::GrammarError: return "GrammarError";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InconsistentTraces: return "InconsistentTraces";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DegenerateAxis: return "DegenerateAxis";
    case ErrorKind::TooFewSteps: return "TooFewSteps";
    case ErrorKind::OrderingViolation: return "OrderingViolation";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::MixedKinds: return "MixedKinds";
    case ErrorKind::EmptyGroup: return "EmptyGroup";
    case ErrorKind::EmptyText: return "EmptyText";
    case ErrorKind::EmptyPrimitives: return "EmptyPrimitives";
    case ErrorKind::EmptySpan: return "EmptySpan";
    case ErrorKind::NonFiniteLatent: return "NonFiniteLatent";
    case ErrorKind::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorKind::MissingArtifact: return "MissingArtifact";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "UnknownError";
}

}  // namespace splitdit
