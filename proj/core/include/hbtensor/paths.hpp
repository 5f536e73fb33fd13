#pragma once

#include "hbtensor/hbgraph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hbtensor {

enum class PathKind { strict, large };

/// Vertex / hb-edge alternation x0 e1 x1 ... es xs.
struct MPath {
  std::vector<std::size_t> vertices;  // s + 1 entries
  std::vector<std::size_t> edges;     // s entries
  PathKind kind = PathKind::strict;

  std::size_t length() const noexcept { return edges.size(); }
};

enum class PathClosure { open, cycle };

/// Throws Error(UnknownVertex / UnknownEdge) on out-of-range ids.
bool validate_path(const HbGraph& h, const MPath& p);

/// Number of copy choices for the interior vertices only.
BigInt count_interior_choices(const HbGraph& h, const MPath& p);
/// Number of m-paths along the alternation, extremity copies included.
/// Throws Error(InvalidPath / NotNatural).
BigInt count_paths(const HbGraph& h, const MPath& p);

/// Extremities are compared as original vertices; copy-level almost-cycles
/// are not distinguished.
PathClosure classify(const MPath& p);

/// nullopt means the vertices are disconnected.
std::optional<std::size_t> distance(const HbGraph& h, std::size_t x, std::size_t y);
/// Components in order of their smallest vertex; each sorted.
std::vector<std::vector<std::size_t>> connected_components(const HbGraph& h);
std::optional<std::size_t> diameter(const HbGraph& h);
bool is_connected(const HbGraph& h);

}  // namespace hbtensor
