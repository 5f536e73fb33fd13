#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hbtensor {

enum class ErrorKind {
  UniverseMismatch,
  NotNatural,
  NegativeMultiplicity,
  UnknownElement,
  UnknownVertex,
  UnknownEdge,
  DuplicateElement,
  EmptyEdgeFamily,
  EmptyEdge,
  EmptyMultiset,
  RepeatedEdges,
  NotUniform,
  NotAHypergraph,
  VertexCollision,
  ReservedVertexId,
  NonPositiveCoefficient,
  InvalidPath,
  IndexOutOfRange,
  DimensionMismatch,
  TraceMismatch,
  DenseTooLarge,
  Precondition,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hbtensor
