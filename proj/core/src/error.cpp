#include "hbtensor/error.hpp"

namespace hbtensor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::EmptyEdgeFamily: return "EmptyEdgeFamily";
    case ErrorKind::EmptyEdge: return "EmptyEdge";
    case ErrorKind::EmptyMultiset: return "EmptyMultiset";
    case ErrorKind::RepeatedEdges: return "RepeatedEdges";
    case ErrorKind::NotUniform: return "NotUniform";
    case ErrorKind::NotAHypergraph: return "NotAHypergraph";
    case ErrorKind::VertexCollision: return "VertexCollision";
    case ErrorKind::ReservedVertexId: return "ReservedVertexId";
    case ErrorKind::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TraceMismatch: return "TraceMismatch";
    case ErrorKind::DenseTooLarge: return "DenseTooLarge";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

}  // namespace hbtensor
