#pragma once

#include "hbtensor/hbgraph.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hbtensor {

enum class Approach { straightforward, silo, layered };

std::string_view to_string(Approach a);
/// Accepts str|sil|lay as well as the full names.
std::optional<Approach> parse_approach(std::string_view text);

/// Null vertex ids use this prefix; user vertex ids must not.
inline constexpr std::string_view kReservedPrefix = "__";

std::string null_vertex_id(Approach a, unsigned level);

struct UniformisationTrace {
  Approach approach = Approach::silo;
  unsigned r_h = 0;
  std::vector<std::string> vertices;  // original vertex ids, in order
  /// Null vertex id and its 1-based tensor index, in index order.
  std::vector<std::pair<std::string, std::size_t>> null_vertices;
  std::map<unsigned, Rational> layer_coeffs;  // r -> r_h / r
  std::vector<std::size_t> edge_provenance;   // output edge -> input edge

  std::size_t n() const noexcept { return vertices.size(); }
  std::size_t n_a() const noexcept { return null_vertices.size(); }
  std::size_t dim() const noexcept { return n() + n_a(); }

  friend bool operator==(const UniformisationTrace&, const UniformisationTrace&) = default;
};

struct Uniformised {
  HbGraph graph;
  UniformisationTrace trace;
};

HbGraph canonical_weighting(const HbGraph& h);
/// Sets every weight to the product of the current weight and c.
/// Throws Error(NonPositiveCoefficient).
HbGraph dilatation(const HbGraph& h, const Rational& c);
/// Appends y with multiplicity m_range(h) - #e in every edge.
HbGraph y_complement(const HbGraph& h, const std::string& y);
/// Same as y_complement with an explicit target m-cardinality.
HbGraph y_complement(const HbGraph& h, const std::string& y, const Rational& target);
HbGraph vertex_increase(const HbGraph& h, const std::string& y, unsigned alpha);
HbGraph merge(std::span<const HbGraph> family);

/// Entry r - 1 holds the edges of m-cardinality r, for r = 1..m_range(h).
/// Throws Error(EmptyEdge / NotNatural).
std::vector<HbGraph> decompose(const HbGraph& h);

/// Validates the inputs accepted by the tensor constructions; throws the
/// matching Error otherwise.
void require_tensor_input(const HbGraph& h);

Uniformised uniformize(const HbGraph& h, Approach approach);

}  // namespace hbtensor
